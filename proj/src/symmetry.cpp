// Copyright 2026 The Triphoton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "triphoton/symmetry.hpp"

namespace triphoton {

Mat6 ordering_block(const Mat3& scatterer) {
    const auto& perms = Permutation3::all();
    Mat6 m;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) {
            cdouble prod = 1.0;
            for (int k = 1; k <= 3; ++k)
                prod *= scatterer(static_cast<std::size_t>(perms[r](k) - 1),
                                  static_cast<std::size_t>(perms[c](k) - 1));
            m(r, c) = prod;
        }
    return m;
}

Mat6 regular_action(const Permutation3& s) {
    const auto& perms = Permutation3::all();
    Mat6 q;
    for (std::size_t c = 0; c < 6; ++c) q(s.after(perms[c]).index(), c) = 1.0;
    return q;
}

namespace {

Mat6 build_projector(S3CharacterTable::Irrep irrep) {
    Mat6 p;
    const double d = S3CharacterTable::dimension(irrep);
    for (const auto& s : Permutation3::all()) {
        const double chi = S3CharacterTable::character(irrep, s.cycle_class());
        if (chi == 0.0) continue;
        const Mat6 q = regular_action(s);
        for (std::size_t i = 0; i < 36; ++i) p.a[i] += (d / 6.0) * chi * q.a[i];
    }
    return p;
}

}  // namespace

const IsotypicProjectors& young_projectors() {
    static const IsotypicProjectors projectors = {
        build_projector(S3CharacterTable::Irrep::symmetric),
        build_projector(S3CharacterTable::Irrep::mixed),
        build_projector(S3CharacterTable::Irrep::antisymmetric)};
    return projectors;
}

IsotypicTraces isotypic_traces(const Mat6& ordering) {
    const auto& p = young_projectors();
    return {trace(p.sym * ordering), trace(p.mixed * ordering), trace(p.anti * ordering)};
}

std::array<double, 3> input_norms() {
    const auto& p = young_projectors();
    std::array<double, 3> norms{};
    const Mat6* projs[3] = {&p.sym, &p.mixed, &p.anti};
    for (std::size_t k = 0; k < 3; ++k) {
        double n = 0.0;
        for (std::size_t r = 0; r < 6; ++r) n += std::norm((*projs[k])(r, 0));
        norms[k] = n;
    }
    return norms;
}

}  // namespace triphoton
