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

#include "triphoton/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "triphoton/matfun.hpp"

namespace triphoton {
namespace oracle {

cdouble fock_amplitude(const Mat3& scatterer, const std::array<double, 3>& out_freqs,
                       const std::array<double, 3>& in_freqs) {
    if (in_freqs[0] == in_freqs[1] || in_freqs[0] == in_freqs[2] || in_freqs[1] == in_freqs[2])
        throw std::invalid_argument("fock_amplitude: input frequencies must be distinct");

    std::array<std::pair<int, double>, 3> wanted;
    for (int port = 0; port < 3; ++port)
        wanted[static_cast<std::size_t>(port)] = {port, out_freqs[static_cast<std::size_t>(port)]};
    std::sort(wanted.begin(), wanted.end());

    cdouble acc = 0.0;
    for (int k1 = 0; k1 < 3; ++k1)
        for (int k2 = 0; k2 < 3; ++k2)
            for (int k3 = 0; k3 < 3; ++k3) {
                std::array<std::pair<int, double>, 3> produced = {
                    std::pair<int, double>{k1, in_freqs[0]},
                    std::pair<int, double>{k2, in_freqs[1]},
                    std::pair<int, double>{k3, in_freqs[2]}};
                std::sort(produced.begin(), produced.end());
                if (produced != wanted) continue;
                acc += scatterer(static_cast<std::size_t>(k1), 0) *
                       scatterer(static_cast<std::size_t>(k2), 1) *
                       scatterer(static_cast<std::size_t>(k3), 2);
            }
    return acc;
}

QuadratureSpec default_rate_quadrature(const SpectralSetup& setup, int nodes_per_axis) {
    double lo = setup.source.carrier - 10.0 * setup.source.width;
    double hi = setup.source.carrier + 10.0 * setup.source.width;
    for (const auto& det : setup.detectors) {
        lo = std::min(lo, det.carrier - 10.0 * det.width);
        hi = std::max(hi, det.carrier + 10.0 * det.width);
    }
    return {nodes_per_axis, lo, hi};
}

namespace {

void validate_window(const SpectralSetup& setup, const QuadratureSpec& quad) {
    if (quad.nodes < 3) throw std::invalid_argument("quadrature_rate: need at least 3 nodes per axis");
    auto covered = [&](const GaussianSpectrum& g) {
        return quad.lo <= g.carrier - 10.0 * g.width && quad.hi >= g.carrier + 10.0 * g.width;
    };
    bool ok = covered(setup.source);
    for (const auto& det : setup.detectors) ok = ok && covered(det);
    if (!ok)
        throw std::invalid_argument("quadrature_rate: window must cover every carrier by 10 widths");
}

}  // namespace

double quadrature_rate(const Mat3& scatterer, const SpectralSetup& setup, const DelayPair& delays,
                       const QuadratureSpec& quad) {
    if (setup.detectors.size() != 3)
        throw std::invalid_argument("quadrature_rate: setup must have exactly 3 detectors");
    validate_window(setup, quad);

    // Detector-weighted source amplitude per (detector, input) pair. The
    // triple frequency integral factorizes because the scatterer conserves
    // each photon's frequency.
    const double tau_in[3] = {0.0, delays.tau1, delays.tau2};
    const double h = (quad.hi - quad.lo) / static_cast<double>(quad.nodes - 1);
    cdouble weighted[3][3] = {};
    for (int k = 0; k < quad.nodes; ++k) {
        const double w = quad.lo + h * static_cast<double>(k);
        const double edge = (k == 0 || k == quad.nodes - 1) ? 0.5 : 1.0;
        const double src = gaussian_amplitude(setup.source, w);
        for (std::size_t i = 0; i < 3; ++i) {
            const double det = gaussian_amplitude(setup.detectors[i], w);
            for (std::size_t j = 0; j < 3; ++j) {
                const double phase = w * tau_in[j];
                weighted[i][j] += edge * det * src * cdouble{std::cos(phase), std::sin(phase)};
            }
        }
    }
    for (auto& row : weighted)
        for (auto& v : row) v *= h;

    // Assemble the projected amplitude configuration by configuration. The
    // scattering coefficient of each one-photon-per-port configuration comes
    // from the 27-term kernel with placeholder frequency labels.
    const std::array<double, 3> labels = {1.0, 2.0, 3.0};
    cdouble amp = 0.0;
    for (const auto& rho : Permutation3::all()) {
        // Port i receives the photon of input rho(i).
        const std::array<double, 3> out = {labels[static_cast<std::size_t>(rho(1) - 1)],
                                           labels[static_cast<std::size_t>(rho(2) - 1)],
                                           labels[static_cast<std::size_t>(rho(3) - 1)]};
        const cdouble coeff = fock_amplitude(scatterer, out, labels);
        cdouble spectral = 1.0;
        for (std::size_t i = 0; i < 3; ++i)
            spectral *= weighted[i][static_cast<std::size_t>(rho(static_cast<int>(i) + 1) - 1)];
        amp += coeff * spectral;
    }
    return std::norm(amp);
}

double quadrature_rate(const Mat3& scatterer, const SpectralSetup& setup, const DelayPair& delays) {
    return quadrature_rate(scatterer, setup, delays, default_rate_quadrature(setup));
}

}  // namespace oracle
}  // namespace triphoton
