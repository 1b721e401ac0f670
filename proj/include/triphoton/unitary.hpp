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

#ifndef TRIPHOTON_UNITARY_HPP
#define TRIPHOTON_UNITARY_HPP

#include <array>

#include "triphoton/complexmat.hpp"

namespace triphoton {

/// Euler angles (radians) of an SU(2) interferometer element. Angles are not
/// range-reduced; trigonometric periodicity handles wrapping.
struct EulerSU2 {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// The eight generalized Euler angles (radians) of an SU(3) interferometer,
/// in the order (alpha1, beta1, alpha2, beta2, alpha3, beta3, gamma1, gamma2).
struct OmegaSU3 {
    double alpha1 = 0.0;
    double beta1 = 0.0;
    double alpha2 = 0.0;
    double beta2 = 0.0;
    double alpha3 = 0.0;
    double beta3 = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;

    static OmegaSU3 from_array(const std::array<double, 8>& v);
    std::array<double, 8> to_array() const;
};

/// SU(2) rotation
///
///   [ e^{-i(alpha+gamma)} cos(beta/2)   -e^{-i(alpha-gamma)} sin(beta/2) ]
///   [ e^{ i(alpha-gamma)} sin(beta/2)    e^{ i(alpha+gamma)} cos(beta/2) ]
///
/// Row = output port, column = input port. Throws std::invalid_argument on
/// non-finite angles.
Mat2 su2_rotation(const EulerSU2& angles);

/// SU(2) block acting on modes 2 and 3 with phase convention
/// R23(alpha, beta, -alpha); mode 1 is untouched.
Mat3 embed_r23(double alpha, double beta);

/// SU(2) block acting on modes 1 and 2, R12(alpha, beta, -alpha).
Mat3 embed_r12(double alpha, double beta);

/// Diagonal phase factor diag(e^{-2i g1}, e^{i g1 - i g2/2}, e^{i g1 + i g2/2});
/// always has unit determinant.
Mat3 diagonal_phases(double gamma1, double gamma2);

/// Full SU(3) matrix
///   R(Omega) = R23(a1,b1,-a1) R12(a2,b2,-a2) R23(a3,b3,-a3) P(g1,g2)
/// with the rightmost factor applied first to input vectors.
Mat3 build_su3(const OmegaSU3& omega);

/// The balanced symmetric beam splitter, su2_rotation(pi/4, pi/2, -pi/4).
/// All entries have modulus 1/sqrt(2).
Mat2 balanced_symmetric_bs();

}  // namespace triphoton

#endif  // TRIPHOTON_UNITARY_HPP
