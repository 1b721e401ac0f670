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

#ifndef TRIPHOTON_COINCIDENCE_HPP
#define TRIPHOTON_COINCIDENCE_HPP

#include "triphoton/complexmat.hpp"
#include "triphoton/spectral.hpp"

namespace triphoton {

/// Arrival delays of the input-port-2 and input-port-3 photons relative to
/// the (undelayed) port-1 photon.
struct DelayPair {
    double tau1;
    double tau2;
};

/// Coherent three-fold coincidence amplitude
///
///   A = sum_{s in S3} [prod_j R(s(j), j)] [prod_j O_{s(j)}(tau_j)]
///
/// with tau = (0, tau1, tau2) attached to input ports and O_i the delayed
/// overlap of the source spectrum with detector i. Each detector projects
/// onto a single fixed spectral mode, so the six permutation terms add
/// coherently. Throws std::invalid_argument unless the setup has 3 detectors.
cdouble amplitude3(const Mat3& scatterer, const SpectralSetup& setup, const DelayPair& delays);

/// Probability of one photon at each of the three output ports,
/// |amplitude3|^2. Lies in [0, 1].
double rate_p111(const Mat3& scatterer, const SpectralSetup& setup, const DelayPair& delays);

/// Two-channel analog: |sum_{s in S2} prod_j B(s(j), j) O_{s(j)}(tau_j)|^2
/// with tau = (0, tau). Requires a 2-detector setup. Vanishes identically for
/// a balanced symmetric beam splitter with identical detectors.
double rate_p11(const Mat2& splitter, const SpectralSetup& setup, double tau);

/// Zero-delay rate together with its permanent factorization. At zero delays
/// the amplitude collapses to Per(R) * prod_i O_i(0), so the rate vanishes
/// iff the permanent vanishes or some overlap vanishes.
struct ZeroDelayReport {
    double rate;
    /// True when all detectors share the source carrier and are identical;
    /// only then is the factorization below part of the reported contract.
    bool factorization_applies;
    double permanent_mod_sq;
    double overlap_mod_sq_product;  // prod_i |O_i(0)|^2
};

ZeroDelayReport zero_delay_rate(const Mat3& scatterer, const SpectralSetup& setup);

}  // namespace triphoton

#endif  // TRIPHOTON_COINCIDENCE_HPP
