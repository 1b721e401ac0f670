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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "triphoton/matfun.hpp"
#include "triphoton/unitary.hpp"

using namespace triphoton;
using test_support::rel_err;
using test_support::Rng;

namespace {

// n! -term expansion, the oracle for the Ryser route.
cdouble brute_permanent(const std::vector<cdouble>& a, int n) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    cdouble acc = 0.0;
    do {
        cdouble prod = 1.0;
        for (int i = 0; i < n; ++i)
            prod *= a[static_cast<std::size_t>(i * n + idx[static_cast<std::size_t>(i)])];
        acc += prod;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return acc;
}

}  // namespace

TEST_CASE("Permutation3 validation and structure") {
    CHECK_THROWS_AS(Permutation3({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation3({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation3({1, 2, 4}), std::invalid_argument);

    const auto& all = Permutation3::all();
    CHECK(all[0].images() == std::array<int, 3>{1, 2, 3});
    CHECK(all[1].images() == std::array<int, 3>{1, 3, 2});
    CHECK(all[2].images() == std::array<int, 3>{2, 1, 3});
    CHECK(all[3].images() == std::array<int, 3>{2, 3, 1});
    CHECK(all[4].images() == std::array<int, 3>{3, 1, 2});
    CHECK(all[5].images() == std::array<int, 3>{3, 2, 1});

    using C = Permutation3::CycleClass;
    const C classes[6] = {C::identity,    C::transposition, C::transposition,
                          C::three_cycle, C::three_cycle,   C::transposition};
    const int parities[6] = {1, -1, -1, 1, 1, -1};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(all[i].cycle_class() == classes[i]);
        CHECK(all[i].parity() == parities[i]);
        CHECK(all[i].index() == i);
        CHECK(all[i].after(all[i].inverse()) == all[0]);
        CHECK(all[i].inverse().after(all[i]) == all[0]);
    }
    // sample composition: (231) after (231) = (312)
    CHECK(all[3].after(all[3]) == all[4]);
}

TEST_CASE("S3 character table") {
    using I = S3CharacterTable::Irrep;
    using C = Permutation3::CycleClass;
    CHECK(S3CharacterTable::character(I::symmetric, C::identity) == 1.0);
    CHECK(S3CharacterTable::character(I::mixed, C::identity) == 2.0);
    CHECK(S3CharacterTable::character(I::mixed, C::transposition) == 0.0);
    CHECK(S3CharacterTable::character(I::mixed, C::three_cycle) == -1.0);
    CHECK(S3CharacterTable::character(I::antisymmetric, C::transposition) == -1.0);
    CHECK(S3CharacterTable::character(I::antisymmetric, C::three_cycle) == 1.0);

    // dimensions match characters at the identity
    for (I irrep : {I::symmetric, I::mixed, I::antisymmetric})
        CHECK(S3CharacterTable::dimension(irrep) ==
              static_cast<int>(S3CharacterTable::character(irrep, C::identity)));

    // column orthogonality with class sizes (1, 3, 2)
    const I irreps[3] = {I::symmetric, I::mixed, I::antisymmetric};
    const C classes[3] = {C::identity, C::transposition, C::three_cycle};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            double dot = 0.0;
            for (C c : classes)
                dot += S3CharacterTable::class_size(c) * S3CharacterTable::character(irreps[a], c) *
                       S3CharacterTable::character(irreps[b], c);
            CHECK(dot == (a == b ? 6.0 : 0.0));
        }
}

TEST_CASE("matrix functions of simple matrices") {
    const Mat3 id = Mat3::identity();
    CHECK(permanent(id) == cdouble{1.0, 0.0});
    CHECK(determinant(id) == cdouble{1.0, 0.0});
    CHECK(immanant(id) == cdouble{2.0, 0.0});
    CHECK(std::abs(weighted_sum(id) - 1.0) < 1e-15);

    Mat3 diag;
    diag(0, 0) = {0.3, 0.1};
    diag(1, 1) = {-1.2, 0.4};
    diag(2, 2) = {0.8, -0.9};
    const cdouble abc = diag(0, 0) * diag(1, 1) * diag(2, 2);
    CHECK(std::abs(immanant(diag) - 2.0 * abc) < 1e-15);
    CHECK(std::abs(permanent(diag) - abc) < 1e-15);
    CHECK(std::abs(determinant(diag) - abc) < 1e-15);
}

TEST_CASE("anchors for the fig1b interferometer matrix") {
    const Mat3 rb = build_su3(test_support::kOmegaFig1b);
    const MatrixFunctionSet f = matrix_functions(rb);
    CHECK(std::abs(f.per - (-0.17677669529663687)) < 1e-10);
    CHECK(std::abs(f.det - 1.0) < 1e-12);
    CHECK(std::abs(f.imm - (-0.457106781186547351)) < 1e-12);

    // weighted sum equals the diagonal product
    const cdouble diag = rb(0, 0) * rb(1, 1) * rb(2, 2);
    CHECK(std::abs(diag - (-0.0151650429449553138)) < 1e-14);
    CHECK(rel_err(weighted_sum(rb), diag) < 1e-12);
    CHECK(rel_err(f.per / 6.0 + f.imm / 3.0 + f.det / 6.0, diag) < 1e-12);

    CHECK(std::abs(submatrix_permanent(rb, 1, 3) - 0.353553390593273842) < 1e-13);
}

TEST_CASE("determinant sign under row swaps") {
    const Mat3 rb = build_su3(test_support::kOmegaFig1b);
    const Mat3 swapped = permute_rows(rb, Permutation3({2, 1, 3}));
    CHECK(std::abs(determinant(swapped) + 1.0) < 1e-12);
}

TEST_CASE("weighted sum equals the diagonal product for random matrices") {
    Rng rng(7);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Mat3 m = rng.mat3();
        // both sides by independent routes: library vs direct expansion
        cdouble direct = 0.0;
        for (const auto& s : Permutation3::all()) {
            const double weight =
                (1.0 + s.parity() +
                 2.0 * S3CharacterTable::character(S3CharacterTable::Irrep::mixed, s.cycle_class())) /
                6.0;
            cdouble prod = 1.0;
            for (int i = 1; i <= 3; ++i)
                prod *= m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(s(i) - 1));
            direct += weight * prod;
        }
        worst = std::max(worst, rel_err(weighted_sum(m), m(0, 0) * m(1, 1) * m(2, 2)));
        worst = std::max(worst, rel_err(direct, m(0, 0) * m(1, 1) * m(2, 2)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("row permutations preserve the permanent and sign the determinant") {
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        const Mat3 m = rng.mat3();
        const cdouble per0 = permanent(m), det0 = determinant(m);
        for (const auto& p : Permutation3::all()) {
            const Mat3 q = permute_rows(m, p);
            CHECK(rel_err(permanent(q), per0) < 1e-12);
            CHECK(rel_err(determinant(q), static_cast<double>(p.parity()) * det0) < 1e-12);
        }
    }
    // transposition applied to the identity gives a permutation matrix
    const Mat3 t = permute_rows(Mat3::identity(), Permutation3({2, 1, 3}));
    CHECK(t(0, 1) == cdouble{1.0, 0.0});
    CHECK(t(1, 0) == cdouble{1.0, 0.0});
    CHECK(t(2, 2) == cdouble{1.0, 0.0});
    CHECK(std::abs(determinant(t) + 1.0) < 1e-15);
    CHECK(max_abs_diff(permute_rows(t, Permutation3({1, 2, 3})), t) == 0.0);
}

TEST_CASE("submatrix permanents") {
    const Mat3 id = Mat3::identity();
    CHECK(submatrix_permanent(id, 3, 3) == cdouble{1.0, 0.0});
    CHECK(submatrix_permanent(id, 1, 3) == cdouble{0.0, 0.0});
    CHECK_THROWS_AS(submatrix_permanent(id, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(submatrix_permanent(id, 1, 4), std::invalid_argument);

    // against the direct two-term minor expansion
    Rng rng(23);
    const Mat3 m = rng.mat3();
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 3; ++j) {
            std::array<std::size_t, 2> rows{}, cols{};
            for (std::size_t i = 0, r = 0; i < 3; ++i)
                if (i != static_cast<std::size_t>(k - 1)) rows[r++] = i;
            for (std::size_t c = 0, cc = 0; c < 3; ++c)
                if (c != static_cast<std::size_t>(j - 1)) cols[cc++] = c;
            const cdouble direct =
                m(rows[0], cols[0]) * m(rows[1], cols[1]) + m(rows[0], cols[1]) * m(rows[1], cols[0]);
            CHECK(rel_err(submatrix_permanent(m, k, j), direct) == 0.0);
        }
}

TEST_CASE("generic permanent: small orders and validation") {
    const std::vector<cdouble> one = {cdouble{2.0, 1.0}};
    CHECK(permanent(one, 1) == cdouble{2.0, 1.0});

    const std::vector<cdouble> two = {1.0, 2.0, 3.0, 4.0};
    CHECK(permanent(two, 2) == cdouble{10.0, 0.0});  // 1*4 + 2*3

    CHECK_THROWS_AS(permanent(two, 3), std::invalid_argument);
    CHECK_THROWS_AS(permanent(std::vector<cdouble>{}, 0), std::invalid_argument);
    CHECK_THROWS_AS(permanent(std::vector<cdouble>(17 * 17), 17), std::invalid_argument);
}

TEST_CASE("Ryser agrees with the direct expansion up to n = 6") {
    Rng rng(31);
    for (int n = 2; n <= 6; ++n) {
        std::vector<cdouble> a(static_cast<std::size_t>(n * n));
        for (auto& v : a) v = rng.annulus();
        const cdouble brute = brute_permanent(a, n);
        CHECK(rel_err(permanent_ryser(a, n), brute) < 1e-12);
        CHECK(rel_err(permanent(a, n), brute) < 1e-12);
    }
}

TEST_CASE("permanent of a 5x5 via Ryser matches the 120-term expansion") {
    Rng rng(37);
    std::vector<cdouble> a(25);
    for (auto& v : a) v = rng.annulus();
    CHECK(rel_err(permanent(a, 5), brute_permanent(a, 5)) < 1e-12);
}
