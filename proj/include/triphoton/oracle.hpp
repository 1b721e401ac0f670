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

#ifndef TRIPHOTON_ORACLE_HPP
#define TRIPHOTON_ORACLE_HPP

#include <array>

#include "triphoton/coincidence.hpp"
#include "triphoton/complexmat.hpp"
#include "triphoton/spectral.hpp"

namespace triphoton {
namespace oracle {

/// Scattering coefficient for a fixed output configuration, obtained by
/// expanding prod_j (sum_k R_kj adag_k(w_j)) |0> over all 27 port assignments
/// and collecting those whose (port, frequency) multiset matches
/// {(1, out[0]), (2, out[1]), (3, out[2])}. Frequencies are labels and are
/// compared exactly. Requires distinct input frequencies.
cdouble fock_amplitude(const Mat3& scatterer, const std::array<double, 3>& out_freqs,
                       const std::array<double, 3>& in_freqs);

/// Default quadrature for a setup: 1001 nodes per axis over the union of
/// [carrier +- 10 width] across the source and all detectors.
QuadratureSpec default_rate_quadrature(const SpectralSetup& setup, int nodes_per_axis = 1001);

/// Brute-force coincidence rate: detector-weighted source amplitudes are
/// integrated numerically per input frequency, and the scattering kernel is
/// assembled from the 27-term expansion via fock_amplitude rather than the
/// six-permutation shortcut. Converges to rate_p111 as nodes increase.
/// Throws std::invalid_argument if the window does not cover every carrier
/// by 10 widths.
double quadrature_rate(const Mat3& scatterer, const SpectralSetup& setup, const DelayPair& delays,
                       const QuadratureSpec& quad);

double quadrature_rate(const Mat3& scatterer, const SpectralSetup& setup, const DelayPair& delays);

}  // namespace oracle
}  // namespace triphoton

#endif  // TRIPHOTON_ORACLE_HPP
