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

#ifndef TRIPHOTON_SPECTRAL_HPP
#define TRIPHOTON_SPECTRAL_HPP

#include <functional>
#include <vector>

#include "triphoton/complexmat.hpp"

namespace triphoton {

/// Normalized Gaussian spectral amplitude
///   phi(w) = (2 pi width^2)^{-1/4} exp(-(w - carrier)^2 / (4 width^2)),
/// used both for source pulses and detector response modes. Frequencies are
/// in an arbitrary consistent unit; delays use its inverse.
struct GaussianSpectrum {
    double carrier;
    double width;

    /// Throws std::invalid_argument unless width > 0 and both values finite
    /// (the normalization diverges at zero width).
    GaussianSpectrum(double carrier_, double width_);

    friend bool operator==(const GaussianSpectrum&, const GaussianSpectrum&) = default;
};

/// Amplitude of the spectrum at frequency omega.
double gaussian_amplitude(const GaussianSpectrum& g, double omega);

/// One source spectrum plus one detector spectrum per output port (2 or 3).
struct SpectralSetup {
    GaussianSpectrum source;
    std::vector<GaussianSpectrum> detectors;
};

/// Pairwise source/detector spectral statistics:
///   sigma_bar_sq     = s0^2 + si^2
///   varsigma_bar_sq  = (si^2 w0 + s0^2 wi) / (s0^2 + si^2)   (a weighted mean
///                      frequency, despite the squared-variance notation)
///   sigma_tilde_sq   = (1/s0^2 + 1/si^2)^{-1}
///   lambda_factor    = sqrt(2 sigma_tilde_sq / sigma_bar_sq)
///                      * exp(-(w0 - wi)^2 / (2 sigma_bar_sq))
///
/// lambda_factor is a mismatch diagnostic only; rates are computed from exact
/// overlap integrals. The two differ by a constant: |O(0)|^2 = sqrt(2) * lambda.
struct OverlapStats {
    double sigma_bar_sq;
    double varsigma_bar_sq;
    double sigma_tilde_sq;
    double lambda_factor;
};

OverlapStats overlap_stats(const GaussianSpectrum& source, const GaussianSpectrum& detector);

/// Closed form of the delayed source/detector overlap
///   O(tau) = integral dw conj(phiD(w)) phiS(w) e^{i w tau}
///          = sqrt(2 s0 si / sigma_bar_sq)
///            * exp(-(w0 - wi)^2 / (4 sigma_bar_sq))
///            * exp(i varsigma_bar_sq tau) * exp(-sigma_tilde_sq tau^2).
/// |O(0)| = 1 exactly when the two spectra coincide.
cdouble gaussian_overlap(const GaussianSpectrum& source, const GaussianSpectrum& detector, double tau);

/// Trapezoid rule specification: node count and integration window per axis.
struct QuadratureSpec {
    int nodes;
    double lo;
    double hi;
};

/// Default window for a source/detector pair: union of [carrier +- 10 width]
/// with 2001 nodes. Gaussian tails at 10 widths are below 1e-21.
QuadratureSpec default_overlap_window(const GaussianSpectrum& source, const GaussianSpectrum& detector);

using SpectralFn = std::function<cdouble(double)>;

/// Numerical O(tau) for arbitrary spectral profiles. Throws
/// std::invalid_argument for fewer than 2 nodes or an empty window.
cdouble quadrature_overlap(const SpectralFn& source, const SpectralFn& detector, double tau,
                           const QuadratureSpec& quad);

/// Numerical O(tau) for Gaussian profiles with an explicit spec.
cdouble quadrature_overlap(const GaussianSpectrum& source, const GaussianSpectrum& detector, double tau,
                           const QuadratureSpec& quad);

/// Numerical O(tau) for Gaussian profiles with the default spec.
cdouble quadrature_overlap(const GaussianSpectrum& source, const GaussianSpectrum& detector, double tau);

}  // namespace triphoton

#endif  // TRIPHOTON_SPECTRAL_HPP
