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

#include "triphoton/matfun.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace triphoton {

Permutation3::Permutation3(const std::array<int, 3>& images) : images_(images) {
    bool seen[3] = {false, false, false};
    for (int v : images_) {
        if (v < 1 || v > 3) throw std::invalid_argument("permutation images must lie in {1,2,3}");
        if (seen[v - 1]) throw std::invalid_argument("permutation images must be distinct");
        seen[v - 1] = true;
    }
}

int Permutation3::parity() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

Permutation3::CycleClass Permutation3::cycle_class() const {
    int fixed = 0;
    for (int i = 1; i <= 3; ++i)
        if ((*this)(i) == i) ++fixed;
    if (fixed == 3) return CycleClass::identity;
    if (fixed == 1) return CycleClass::transposition;
    return CycleClass::three_cycle;
}

Permutation3 Permutation3::inverse() const {
    std::array<int, 3> inv{};
    for (int i = 1; i <= 3; ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation3(inv);
}

Permutation3 Permutation3::after(const Permutation3& q) const {
    return Permutation3({(*this)(q(1)), (*this)(q(2)), (*this)(q(3))});
}

const std::array<Permutation3, 6>& Permutation3::all() {
    static const std::array<Permutation3, 6> elems = {
        Permutation3({1, 2, 3}), Permutation3({1, 3, 2}), Permutation3({2, 1, 3}),
        Permutation3({2, 3, 1}), Permutation3({3, 1, 2}), Permutation3({3, 2, 1})};
    return elems;
}

std::size_t Permutation3::index() const {
    const auto& elems = all();
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == *this) return i;
    return 0;  // unreachable: constructor guarantees membership
}

double S3CharacterTable::character(Irrep irrep, Permutation3::CycleClass cls) {
    using C = Permutation3::CycleClass;
    switch (irrep) {
        case Irrep::symmetric:
            return 1.0;
        case Irrep::mixed:
            return cls == C::identity ? 2.0 : (cls == C::transposition ? 0.0 : -1.0);
        case Irrep::antisymmetric:
            return cls == C::transposition ? -1.0 : 1.0;
    }
    return 0.0;
}

int S3CharacterTable::dimension(Irrep irrep) {
    return irrep == Irrep::mixed ? 2 : 1;
}

int S3CharacterTable::class_size(Permutation3::CycleClass cls) {
    using C = Permutation3::CycleClass;
    return cls == C::identity ? 1 : (cls == C::transposition ? 3 : 2);
}

namespace {

cdouble perm_product(const Mat3& m, const Permutation3& s) {
    cdouble p = 1.0;
    for (int i = 1; i <= 3; ++i) p *= m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(s(i) - 1));
    return p;
}

}  // namespace

cdouble permanent(const Mat3& m) {
    cdouble acc = 0.0;
    for (const auto& s : Permutation3::all()) acc += perm_product(m, s);
    return acc;
}

cdouble permanent_ryser(std::span<const cdouble> row_major, int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("permanent: order must satisfy 1 <= n <= 16");
    if (row_major.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("permanent: matrix data must be square of the stated order");

    // Gray-code subset walk: maintain per-row sums over the current column
    // subset S; per(A) = sum_S (-1)^{n-|S|} prod_i sum_{j in S} A_ij.
    std::vector<cdouble> rowsum(static_cast<std::size_t>(n), 0.0);
    cdouble acc = 0.0;
    std::uint32_t prev_gray = 0;
    const std::uint32_t total = 1u << n;
    for (std::uint32_t k = 1; k < total; ++k) {
        const std::uint32_t gray = k ^ (k >> 1);
        const std::uint32_t diff = gray ^ prev_gray;
        const int col = std::countr_zero(diff);
        const double sign_col = (gray & diff) ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i)
            rowsum[static_cast<std::size_t>(i)] +=
                sign_col * row_major[static_cast<std::size_t>(i * n + col)];
        cdouble prod = 1.0;
        for (int i = 0; i < n; ++i) prod *= rowsum[static_cast<std::size_t>(i)];
        const int popcnt = std::popcount(gray);
        acc += ((n - popcnt) % 2 == 0) ? prod : -prod;
        prev_gray = gray;
    }
    return acc;
}

cdouble permanent(std::span<const cdouble> row_major, int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("permanent: order must satisfy 1 <= n <= 16");
    if (row_major.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("permanent: matrix data must be square of the stated order");
    if (n == 1) return row_major[0];
    if (n == 2) return row_major[0] * row_major[3] + row_major[1] * row_major[2];
    if (n == 3) {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) m.a[i] = row_major[i];
        return permanent(m);
    }
    return permanent_ryser(row_major, n);
}

cdouble determinant(const Mat3& m) {
    cdouble acc = 0.0;
    for (const auto& s : Permutation3::all()) acc += static_cast<double>(s.parity()) * perm_product(m, s);
    return acc;
}

cdouble immanant(const Mat3& m) {
    cdouble acc = 0.0;
    for (const auto& s : Permutation3::all())
        acc += S3CharacterTable::character(S3CharacterTable::Irrep::mixed, s.cycle_class()) * perm_product(m, s);
    return acc;
}

MatrixFunctionSet matrix_functions(const Mat3& m) {
    return {permanent(m), determinant(m), immanant(m)};
}

cdouble weighted_sum(const Mat3& m) {
    return permanent(m) / 6.0 + immanant(m) / 3.0 + determinant(m) / 6.0;
}

cdouble submatrix_permanent(const Mat3& m, int drop_row, int drop_col) {
    if (drop_row < 1 || drop_row > 3 || drop_col < 1 || drop_col > 3)
        throw std::invalid_argument("submatrix_permanent: indices must lie in {1,2,3}");
    std::array<std::size_t, 2> rows{}, cols{};
    for (std::size_t i = 0, r = 0; i < 3; ++i)
        if (i != static_cast<std::size_t>(drop_row - 1)) rows[r++] = i;
    for (std::size_t j = 0, c = 0; j < 3; ++j)
        if (j != static_cast<std::size_t>(drop_col - 1)) cols[c++] = j;
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) + m(rows[0], cols[1]) * m(rows[1], cols[0]);
}

Mat3 permute_rows(const Mat3& m, const Permutation3& p) {
    Mat3 out;
    for (int i = 1; i <= 3; ++i)
        for (std::size_t c = 0; c < 3; ++c)
            out(static_cast<std::size_t>(i - 1), c) = m(static_cast<std::size_t>(p(i) - 1), c);
    return out;
}

}  // namespace triphoton
