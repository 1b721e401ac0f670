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

#include "triphoton/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace triphoton {

GaussianSpectrum::GaussianSpectrum(double carrier_, double width_) : carrier(carrier_), width(width_) {
    if (!std::isfinite(carrier) || !std::isfinite(width))
        throw std::invalid_argument("GaussianSpectrum: carrier and width must be finite");
    if (width <= 0.0) throw std::invalid_argument("GaussianSpectrum: width must be > 0");
}

double gaussian_amplitude(const GaussianSpectrum& g, double omega) {
    const double d = omega - g.carrier;
    const double s2 = g.width * g.width;
    return std::pow(2.0 * std::numbers::pi * s2, -0.25) * std::exp(-d * d / (4.0 * s2));
}

OverlapStats overlap_stats(const GaussianSpectrum& source, const GaussianSpectrum& detector) {
    const double s02 = source.width * source.width;
    const double si2 = detector.width * detector.width;
    OverlapStats st{};
    st.sigma_bar_sq = s02 + si2;
    st.varsigma_bar_sq = (si2 * source.carrier + s02 * detector.carrier) / st.sigma_bar_sq;
    st.sigma_tilde_sq = 1.0 / (1.0 / s02 + 1.0 / si2);
    const double detune = source.carrier - detector.carrier;
    st.lambda_factor =
        std::sqrt(2.0 * st.sigma_tilde_sq / st.sigma_bar_sq) * std::exp(-detune * detune / (2.0 * st.sigma_bar_sq));
    return st;
}

cdouble gaussian_overlap(const GaussianSpectrum& source, const GaussianSpectrum& detector, double tau) {
    if (!std::isfinite(tau)) throw std::invalid_argument("gaussian_overlap: tau must be finite");
    const OverlapStats st = overlap_stats(source, detector);
    const double detune = source.carrier - detector.carrier;
    const double magnitude = std::sqrt(2.0 * source.width * detector.width / st.sigma_bar_sq) *
                             std::exp(-detune * detune / (4.0 * st.sigma_bar_sq)) *
                             std::exp(-st.sigma_tilde_sq * tau * tau);
    const double phase = st.varsigma_bar_sq * tau;
    return magnitude * cdouble{std::cos(phase), std::sin(phase)};
}

QuadratureSpec default_overlap_window(const GaussianSpectrum& source, const GaussianSpectrum& detector) {
    const double lo =
        std::min(source.carrier - 10.0 * source.width, detector.carrier - 10.0 * detector.width);
    const double hi =
        std::max(source.carrier + 10.0 * source.width, detector.carrier + 10.0 * detector.width);
    return {2001, lo, hi};
}

cdouble quadrature_overlap(const SpectralFn& source, const SpectralFn& detector, double tau,
                           const QuadratureSpec& quad) {
    if (quad.nodes < 2) throw std::invalid_argument("quadrature_overlap: node count must be >= 2");
    if (!(quad.hi > quad.lo)) throw std::invalid_argument("quadrature_overlap: integration window is empty");
    const double h = (quad.hi - quad.lo) / static_cast<double>(quad.nodes - 1);
    cdouble acc = 0.0;
    for (int k = 0; k < quad.nodes; ++k) {
        const double w = quad.lo + h * static_cast<double>(k);
        const cdouble f =
            std::conj(detector(w)) * source(w) * cdouble{std::cos(w * tau), std::sin(w * tau)};
        acc += (k == 0 || k == quad.nodes - 1) ? 0.5 * f : f;
    }
    return acc * h;
}

cdouble quadrature_overlap(const GaussianSpectrum& source, const GaussianSpectrum& detector, double tau,
                           const QuadratureSpec& quad) {
    return quadrature_overlap([&](double w) { return cdouble{gaussian_amplitude(source, w), 0.0}; },
                              [&](double w) { return cdouble{gaussian_amplitude(detector, w), 0.0}; }, tau,
                              quad);
}

cdouble quadrature_overlap(const GaussianSpectrum& source, const GaussianSpectrum& detector, double tau) {
    return quadrature_overlap(source, detector, tau, default_overlap_window(source, detector));
}

}  // namespace triphoton
