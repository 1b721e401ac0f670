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

#include "triphoton/coincidence.hpp"

#include <cmath>
#include <stdexcept>

#include "triphoton/matfun.hpp"

namespace triphoton {

cdouble amplitude3(const Mat3& scatterer, const SpectralSetup& setup, const DelayPair& delays) {
    if (setup.detectors.size() != 3)
        throw std::invalid_argument("amplitude3: setup must have exactly 3 detectors");
    if (!std::isfinite(delays.tau1) || !std::isfinite(delays.tau2))
        throw std::invalid_argument("amplitude3: delays must be finite");

    const double tau_in[3] = {0.0, delays.tau1, delays.tau2};
    cdouble overlap[3][3];  // overlap[detector][input port]
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            overlap[i][j] = gaussian_overlap(setup.source, setup.detectors[i], tau_in[j]);

    cdouble acc = 0.0;
    for (const auto& s : Permutation3::all()) {
        cdouble term = 1.0;
        for (int j = 1; j <= 3; ++j) {
            const auto out = static_cast<std::size_t>(s(j) - 1);
            const auto in = static_cast<std::size_t>(j - 1);
            term *= scatterer(out, in) * overlap[out][in];
        }
        acc += term;
    }
    return acc;
}

double rate_p111(const Mat3& scatterer, const SpectralSetup& setup, const DelayPair& delays) {
    return std::norm(amplitude3(scatterer, setup, delays));
}

double rate_p11(const Mat2& splitter, const SpectralSetup& setup, double tau) {
    if (setup.detectors.size() != 2)
        throw std::invalid_argument("rate_p11: setup must have exactly 2 detectors");
    if (!std::isfinite(tau)) throw std::invalid_argument("rate_p11: tau must be finite");

    const double tau_in[2] = {0.0, tau};
    cdouble overlap[2][2];
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            overlap[i][j] = gaussian_overlap(setup.source, setup.detectors[i], tau_in[j]);

    const cdouble amp = splitter(0, 0) * overlap[0][0] * splitter(1, 1) * overlap[1][1] +
                        splitter(1, 0) * overlap[1][0] * splitter(0, 1) * overlap[0][1];
    return std::norm(amp);
}

ZeroDelayReport zero_delay_rate(const Mat3& scatterer, const SpectralSetup& setup) {
    ZeroDelayReport rep{};
    rep.rate = rate_p111(scatterer, setup, {0.0, 0.0});
    rep.permanent_mod_sq = std::norm(permanent(scatterer));
    rep.overlap_mod_sq_product = 1.0;
    for (const auto& det : setup.detectors)
        rep.overlap_mod_sq_product *= std::norm(gaussian_overlap(setup.source, det, 0.0));

    bool shared_carrier = true;
    bool identical = true;
    for (const auto& det : setup.detectors) {
        shared_carrier = shared_carrier && det.carrier == setup.source.carrier;
        identical = identical && det == setup.detectors.front();
    }
    rep.factorization_applies = shared_carrier && identical;
    return rep;
}

}  // namespace triphoton
