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

#include "triphoton/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "triphoton/coincidence.hpp"
#include "triphoton/matfun.hpp"
#include "triphoton/oracle.hpp"
#include "triphoton/spectral.hpp"
#include "triphoton/symmetry.hpp"
#include "triphoton/unitary.hpp"

namespace triphoton {
namespace verify {

namespace {

double rel_err(cdouble a, cdouble b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

struct Reporter {
    std::ostream& out;
    bool all_ok = true;

    void check(const std::string& what, bool ok, double measured, double bound) {
        all_ok = all_ok && ok;
        out << (ok ? "[ ok ] " : "[FAIL] ") << what << "  (measured " << std::scientific
            << std::setprecision(3) << measured << ", bound " << bound << ")\n";
    }
};

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }
    OmegaSU3 omega() {
        return {angle(), angle(), angle(), angle(), angle(), angle(), angle(), angle()};
    }
    /// Complex number with modulus in [0.5, 1.5]; keeps products of entries
    /// well away from underflow so relative comparisons stay meaningful.
    cdouble annulus() {
        const double r = uniform(0.5, 1.5), t = angle();
        return {r * std::cos(t), r * std::sin(t)};
    }
    Mat3 mat3() {
        Mat3 m;
        for (auto& v : m.a) v = annulus();
        return m;
    }
    GaussianSpectrum spectrum() { return {uniform(-1.0, 1.0), uniform(0.05, 1.0)}; }
};

bool suite_identities(const Options& opts, std::ostream& out) {
    Reporter rep{out};
    Rng rng(opts.seed);

    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const Mat3 m = rng.mat3();
        worst = std::max(worst, rel_err(weighted_sum(m), m(0, 0) * m(1, 1) * m(2, 2)));
    }
    rep.check("weighted sum per/6 + imm/3 + det/6 equals the diagonal product (10^4 matrices)",
              worst < 1e-12, worst, 1e-12);

    const Mat3 m = rng.mat3();
    const cdouble per0 = permanent(m), det0 = determinant(m);
    double worst_per = 0.0, worst_det = 0.0;
    for (const auto& p : Permutation3::all()) {
        const Mat3 q = permute_rows(m, p);
        worst_per = std::max(worst_per, rel_err(permanent(q), per0));
        worst_det = std::max(worst_det, rel_err(determinant(q), static_cast<double>(p.parity()) * det0));
    }
    rep.check("permanent invariant under row permutations", worst_per < 1e-12, worst_per, 1e-12);
    rep.check("determinant picks up the permutation sign", worst_det < 1e-12, worst_det, 1e-12);

    double worst_ryser = 0.0;
    for (int n = 2; n <= 6; ++n) {
        std::vector<cdouble> a(static_cast<std::size_t>(n * n));
        for (auto& v : a) v = rng.annulus();
        // direct expansion over all n! permutations
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
        cdouble direct = 0.0;
        do {
            cdouble prod = 1.0;
            for (int i = 0; i < n; ++i) prod *= a[static_cast<std::size_t>(i * n + idx[static_cast<std::size_t>(i)])];
            direct += prod;
        } while (std::next_permutation(idx.begin(), idx.end()));
        worst_ryser = std::max(worst_ryser, rel_err(permanent_ryser(a, n), direct));
    }
    rep.check("Ryser permanent matches direct expansion for n = 2..6", worst_ryser < 1e-12, worst_ryser,
              1e-12);

    using Irrep = S3CharacterTable::Irrep;
    using Cls = Permutation3::CycleClass;
    const Irrep irreps[3] = {Irrep::symmetric, Irrep::mixed, Irrep::antisymmetric};
    const Cls classes[3] = {Cls::identity, Cls::transposition, Cls::three_cycle};
    double worst_orth = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            double dot = 0.0;
            for (const Cls c : classes)
                dot += S3CharacterTable::class_size(c) * S3CharacterTable::character(irreps[a], c) *
                       S3CharacterTable::character(irreps[b], c);
            worst_orth = std::max(worst_orth, std::abs(dot - (a == b ? 6.0 : 0.0)));
        }
    rep.check("character orthogonality sum |C| chi chi = 6 delta", worst_orth < 1e-12, worst_orth, 1e-12);

    double worst_unit = 0.0, worst_det1 = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const Mat3 r = build_su3(rng.omega());
        worst_unit = std::max(worst_unit, unitarity_defect(r));
        worst_det1 = std::max(worst_det1, std::abs(determinant(r) - 1.0));
    }
    rep.check("10^4 random Omega: ||R^dag R - I||_max", worst_unit < 1e-12, worst_unit, 1e-12);
    rep.check("10^4 random Omega: |det R - 1|", worst_det1 < 1e-12, worst_det1, 1e-12);

    return rep.all_ok;
}

bool suite_observations(const Options& opts, std::ostream& out) {
    Reporter rep{out};
    Rng rng(opts.seed);

    const auto& projectors = young_projectors();
    const Mat6* ps[3] = {&projectors.sym, &projectors.mixed, &projectors.anti};
    double worst_idem = 0.0, worst_orth = 0.0;
    Mat6 sum;
    for (int a = 0; a < 3; ++a) {
        worst_idem = std::max(worst_idem, max_abs_diff((*ps[a]) * (*ps[a]), *ps[a]));
        for (int b = 0; b < 3; ++b)
            if (a != b) worst_orth = std::max(worst_orth, max_abs_diff((*ps[a]) * (*ps[b]), Mat6{}));
        for (std::size_t i = 0; i < 36; ++i) sum.a[i] += ps[a]->a[i];
    }
    rep.check("projectors idempotent", worst_idem < 1e-12, worst_idem, 1e-12);
    rep.check("projectors mutually orthogonal", worst_orth < 1e-12, worst_orth, 1e-12);
    const double comp = max_abs_diff(sum, Mat6::identity());
    rep.check("projectors complete", comp < 1e-12, comp, 1e-12);
    const double ranks[3] = {1.0, 4.0, 1.0};
    double worst_rank = 0.0;
    for (int a = 0; a < 3; ++a)
        worst_rank = std::max(worst_rank, std::abs(trace(*ps[a]).real() - ranks[a]));
    rep.check("projector ranks (1, 4, 1)", worst_rank < 1e-12, worst_rank, 1e-12);

    const auto norms = input_norms();
    const double worst_norm = std::max({std::abs(norms[0] - 1.0 / 6.0), std::abs(norms[1] - 2.0 / 3.0),
                                        std::abs(norms[2] - 1.0 / 6.0)});
    rep.check("input-state isotypic norms (1/6, 2/3, 1/6)", worst_norm < 1e-14, worst_norm, 1e-14);

    out << "  sample traces vs matrix functions (random Omega):\n";
    double worst_contract = 0.0, worst_comm = 0.0;
    for (int k = 0; k < 200; ++k) {
        const Mat3 r = (k % 2 == 0) ? build_su3(rng.omega()) : rng.mat3();
        const Mat6 block = ordering_block(r);
        const IsotypicTraces t = isotypic_traces(block);
        const MatrixFunctionSet f = matrix_functions(r);
        worst_contract = std::max({worst_contract, rel_err(t.sym, f.per), rel_err(t.mixed, 2.0 * f.imm),
                                   rel_err(t.anti, f.det)});
        for (const Mat6* p : ps)
            worst_comm = std::max(worst_comm, max_abs_diff((*p) * block, block * (*p)));
        if (k < 3) {
            out << "    t_sym   = " << t.sym << "  per = " << f.per << '\n'
                << "    t_mixed = " << t.mixed << "  2 imm = " << 2.0 * f.imm << '\n'
                << "    t_anti  = " << t.anti << "  det = " << f.det << '\n';
        }
    }
    rep.check("trace contracts (per, 2 imm, det) on 100 unitaries + 100 general matrices",
              worst_contract < 1e-10, worst_contract, 1e-10);
    rep.check("projectors commute with ordering blocks", worst_comm < 1e-12, worst_comm, 1e-12);

    return rep.all_ok;
}

bool suite_oracle(const Options& opts, std::ostream& out) {
    Reporter rep{out};
    Rng rng(opts.seed);

    const Mat3 id = Mat3::identity();
    const std::array<double, 3> labels = {1.0, 2.0, 3.0};
    double id_dev = std::abs(oracle::fock_amplitude(id, labels, labels) - 1.0);
    rep.check("fock amplitude of the identity keeps each photon in its port", id_dev < 1e-15, id_dev,
              1e-15);

    double worst_diag = 0.0;
    for (int k = 0; k < 20; ++k) {
        const Mat3 r = build_su3(rng.omega());
        const cdouble diag = oracle::fock_amplitude(r, labels, labels);
        worst_diag = std::max(worst_diag, rel_err(diag, r(0, 0) * r(1, 1) * r(2, 2)));
        worst_diag = std::max(worst_diag, rel_err(diag, weighted_sum(r)));
    }
    rep.check("diagonal fock amplitude equals R11 R22 R33 and the weighted sum", worst_diag < 1e-12,
              worst_diag, 1e-12);

    double worst_rate = 0.0;
    for (int k = 0; k < 20; ++k) {
        const Mat3 r = build_su3(rng.omega());
        const SpectralSetup setup{rng.spectrum(), {rng.spectrum(), rng.spectrum(), rng.spectrum()}};
        const DelayPair d{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const double fast = rate_p111(r, setup, d);
        const double slow = oracle::quadrature_rate(r, setup, d);
        worst_rate = std::max(worst_rate, rel_err(fast, slow));
    }
    rep.check("analytic rate matches brute-force quadrature on 20 random scenarios", worst_rate < 1e-6,
              worst_rate, 1e-6);

    return rep.all_ok;
}

bool suite_spectral(const Options& opts, std::ostream& out) {
    Reporter rep{out};
    Rng rng(opts.seed);

    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const GaussianSpectrum src = rng.spectrum(), det = rng.spectrum();
        const double tau = rng.uniform(-2.0, 2.0);
        worst = std::max(worst, rel_err(gaussian_overlap(src, det, tau), quadrature_overlap(src, det, tau)));
    }
    rep.check("closed-form overlap matches quadrature on 100 draws", worst < 1e-8, worst, 1e-8);

    double worst_bound = 0.0, worst_sym = 0.0, worst_prod = 0.0;
    for (int k = 0; k < 100; ++k) {
        const GaussianSpectrum src = rng.spectrum(), det = rng.spectrum();
        const double tau = rng.uniform(-2.0, 2.0);
        worst_bound = std::max(worst_bound, std::norm(gaussian_overlap(src, det, 0.0)) - 1.0);
        worst_sym = std::max(worst_sym, std::abs(std::abs(gaussian_overlap(src, det, -tau)) -
                                                 std::abs(gaussian_overlap(src, det, tau))));
        const OverlapStats st = overlap_stats(src, det);
        worst_prod = std::max(worst_prod,
                              rel_err(st.sigma_tilde_sq * st.sigma_bar_sq,
                                      src.width * src.width * det.width * det.width));
    }
    rep.check("detection probability bound |O(0)|^2 <= 1", worst_bound <= 1e-15, worst_bound, 1e-15);
    rep.check("|O(-tau)| = |O(tau)|", worst_sym < 1e-15, worst_sym, 1e-15);
    rep.check("sigma_tilde^2 sigma_bar^2 = s0^2 si^2", worst_prod < 1e-12, worst_prod, 1e-12);

    const GaussianSpectrum same{0.3, 0.7};
    const double unit_dev = std::abs(gaussian_overlap(same, same, 0.0) - 1.0);
    rep.check("identical spectra overlap to exactly 1 at tau = 0", unit_dev == 0.0, unit_dev, 0.0);

    return rep.all_ok;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"identities", "observations", "oracle", "spectral"};
    return names;
}

bool run_suite(const std::string& name, const Options& opts, std::ostream& out) {
    out << "== suite " << name << " (seed " << opts.seed << ") ==\n";
    if (name == "identities") return suite_identities(opts, out);
    if (name == "observations") return suite_observations(opts, out);
    if (name == "oracle") return suite_oracle(opts, out);
    if (name == "spectral") return suite_spectral(opts, out);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

bool run_suites(const std::vector<std::string>& names, const Options& opts, std::ostream& out) {
    const std::vector<std::string>& todo = names.empty() ? suite_names() : names;
    bool ok = true;
    for (const auto& n : todo) ok = run_suite(n, opts, out) && ok;
    return ok;
}

}  // namespace verify
}  // namespace triphoton
