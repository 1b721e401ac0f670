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

#ifndef TRIPHOTON_MATFUN_HPP
#define TRIPHOTON_MATFUN_HPP

#include <array>
#include <span>

#include "triphoton/complexmat.hpp"

namespace triphoton {

/// Element of S3 in one-line notation, 1-based: images() = (s(1), s(2), s(3)).
class Permutation3 {
public:
    /// Throws std::invalid_argument unless the images form a bijection of {1,2,3}.
    explicit Permutation3(const std::array<int, 3>& images);

    /// Image of i under the permutation, i in {1,2,3}.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::array<int, 3>& images() const { return images_; }

    enum class CycleClass { identity, transposition, three_cycle };

    int parity() const;  // +1 for even, -1 for odd
    CycleClass cycle_class() const;
    Permutation3 inverse() const;
    /// Composition acting right-to-left: (p.after(q))(i) = p(q(i)).
    Permutation3 after(const Permutation3& q) const;

    /// The six elements in the fixed enumeration
    /// (123), (132), (213), (231), (312), (321).
    static const std::array<Permutation3, 6>& all();
    /// Position of this element inside all().
    std::size_t index() const;

    friend bool operator==(const Permutation3&, const Permutation3&) = default;

private:
    std::array<int, 3> images_;
};

/// Characters of the three irreducible representations of S3 on the conjugacy
/// classes (identity, transposition, 3-cycle):
///   symmetric (1, 1, 1), mixed (2, 0, -1), antisymmetric (1, -1, 1).
struct S3CharacterTable {
    enum class Irrep { symmetric, mixed, antisymmetric };

    static double character(Irrep irrep, Permutation3::CycleClass cls);
    static int dimension(Irrep irrep);       // 1, 2, 1
    static int class_size(Permutation3::CycleClass cls);  // 1, 3, 2
};

/// Permanent, determinant and (2,1) immanant of one matrix.
struct MatrixFunctionSet {
    cdouble per;
    cdouble det;
    cdouble imm;
};

/// Permanent of a 3x3 matrix by direct 6-term expansion.
cdouble permanent(const Mat3& m);

/// Permanent of an n x n matrix, row-major storage, 1 <= n <= 16.
/// Direct expansion for n <= 3, Ryser's inclusion-exclusion formula above.
/// Throws std::invalid_argument if data.size() != n*n or n is out of range.
cdouble permanent(std::span<const cdouble> row_major, int n);

/// Ryser's formula for any 1 <= n <= 16; exposed so it can be checked against
/// the direct expansion independently.
cdouble permanent_ryser(std::span<const cdouble> row_major, int n);

/// Determinant by signed 6-term expansion.
cdouble determinant(const Mat3& m);

/// The (2,1) immanant, sum_s chi(s) prod_i m(i, s(i)) with raw characters
/// chi = 2 on the identity, 0 on transpositions, -1 on 3-cycles (no 1/d
/// prefactor).
cdouble immanant(const Mat3& m);

MatrixFunctionSet matrix_functions(const Mat3& m);

/// per/6 + imm/3 + det/6; identically equal to m(0,0) m(1,1) m(2,2) because
/// the combined permutation weight (1 + sgn + 2 chi)/6 vanishes off the
/// identity.
cdouble weighted_sum(const Mat3& m);

/// Permanent of the 2x2 minor with row drop_row and column drop_col removed;
/// indices are 1-based. Throws std::invalid_argument when out of range.
cdouble submatrix_permanent(const Mat3& m, int drop_row, int drop_col);

/// Row relabeling: row i of the result is row p(i) of the input.
Mat3 permute_rows(const Mat3& m, const Permutation3& p);

}  // namespace triphoton

#endif  // TRIPHOTON_MATFUN_HPP
