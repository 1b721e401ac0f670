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

#ifndef TRIPHOTON_SYMMETRY_HPP
#define TRIPHOTON_SYMMETRY_HPP

#include <array>

#include "triphoton/complexmat.hpp"
#include "triphoton/matfun.hpp"

namespace triphoton {

/// Action of the interferometer on three photons carrying distinct frequency
/// tags, compressed to the six assignments with one photon per port. Rows and
/// columns are indexed by Permutation3::all():
///
///   M(R)_{rho,sigma} = prod_m R(rho(m), sigma(m)).
///
/// M(identity) = identity. This is a compression, not a representation: the
/// one-photon-per-port sector is not invariant under a general R, so
/// M(R1 R2) = M(R1) M(R2) only when one factor preserves port occupation
/// (diagonal or permutation matrices).
Mat6 ordering_block(const Mat3& scatterer);

/// Left-regular permutation action on the ordering basis, Q(s) e_rho = e_{s rho}.
Mat6 regular_action(const Permutation3& s);

/// Central projectors P_lambda = (d_lambda / 6) sum_s chi_lambda(s) Q(s) onto
/// the symmetric, mixed and antisymmetric isotypic components. Idempotent,
/// mutually orthogonal, ranks (1, 4, 1), summing to the identity; each
/// commutes with every ordering block.
struct IsotypicProjectors {
    Mat6 sym;
    Mat6 mixed;
    Mat6 anti;
};

const IsotypicProjectors& young_projectors();

/// Isotypic traces t_lambda = trace(P_lambda M). For M = ordering_block(R):
///   t_sym = permanent(R), t_mixed = 2 immanant(R), t_anti = determinant(R)
/// (the factor 2 counts the two copies of the mixed component). The
/// identities are polynomial and hold for arbitrary matrices, not only
/// unitaries.
struct IsotypicTraces {
    cdouble sym;
    cdouble mixed;
    cdouble anti;
};

IsotypicTraces isotypic_traces(const Mat6& ordering);

/// Squared norms of the isotypic components of the ordering-basis vector for
/// the one-photon-per-port input state: (1/6, 2/3, 1/6).
std::array<double, 3> input_norms();

}  // namespace triphoton

#endif  // TRIPHOTON_SYMMETRY_HPP
