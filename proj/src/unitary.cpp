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

#include "triphoton/unitary.hpp"

#include <cmath>
#include <stdexcept>

namespace triphoton {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

cdouble expi(double phi) { return {std::cos(phi), std::sin(phi)}; }

}  // namespace

OmegaSU3 OmegaSU3::from_array(const std::array<double, 8>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

std::array<double, 8> OmegaSU3::to_array() const {
    return {alpha1, beta1, alpha2, beta2, alpha3, beta3, gamma1, gamma2};
}

Mat2 su2_rotation(const EulerSU2& angles) {
    require_finite(angles.alpha, "alpha");
    require_finite(angles.beta, "beta");
    require_finite(angles.gamma, "gamma");
    const double c = std::cos(angles.beta / 2.0);
    const double s = std::sin(angles.beta / 2.0);
    Mat2 r;
    r(0, 0) = expi(-(angles.alpha + angles.gamma)) * c;
    r(0, 1) = -expi(-(angles.alpha - angles.gamma)) * s;
    r(1, 0) = expi(angles.alpha - angles.gamma) * s;
    r(1, 1) = expi(angles.alpha + angles.gamma) * c;
    return r;
}

Mat3 embed_r23(double alpha, double beta) {
    require_finite(alpha, "alpha");
    require_finite(beta, "beta");
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);
    Mat3 r = Mat3::identity();
    r(1, 1) = c;
    r(1, 2) = -expi(-alpha) * s;
    r(2, 1) = expi(alpha) * s;
    r(2, 2) = c;
    return r;
}

Mat3 embed_r12(double alpha, double beta) {
    require_finite(alpha, "alpha");
    require_finite(beta, "beta");
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);
    Mat3 r = Mat3::identity();
    r(0, 0) = c;
    r(0, 1) = -expi(-alpha) * s;
    r(1, 0) = expi(alpha) * s;
    r(1, 1) = c;
    return r;
}

Mat3 diagonal_phases(double gamma1, double gamma2) {
    require_finite(gamma1, "gamma1");
    require_finite(gamma2, "gamma2");
    Mat3 p;
    p(0, 0) = expi(-2.0 * gamma1);
    p(1, 1) = expi(gamma1 - gamma2 / 2.0);
    p(2, 2) = expi(gamma1 + gamma2 / 2.0);
    return p;
}

Mat3 build_su3(const OmegaSU3& omega) {
    return embed_r23(omega.alpha1, omega.beta1) * embed_r12(omega.alpha2, omega.beta2) *
           embed_r23(omega.alpha3, omega.beta3) * diagonal_phases(omega.gamma1, omega.gamma2);
}

Mat2 balanced_symmetric_bs() {
    const double q = std::acos(-1.0) / 4.0;
    return su2_rotation({q, 2.0 * q, -q});
}

}  // namespace triphoton
