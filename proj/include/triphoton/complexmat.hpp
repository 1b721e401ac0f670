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

#ifndef TRIPHOTON_COMPLEXMAT_HPP
#define TRIPHOTON_COMPLEXMAT_HPP

#include <array>
#include <complex>
#include <cstddef>

namespace triphoton {

using cdouble = std::complex<double>;

/// Dense N x N complex matrix with value semantics. Row/column indices are
/// 0-based; throughout the library rows are output ports and columns are
/// input ports.
template <std::size_t N>
struct CMat {
    std::array<cdouble, N * N> a{};

    cdouble& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
    const cdouble& operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

    static constexpr std::size_t dim() { return N; }

    static CMat identity() {
        CMat m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    friend CMat operator*(const CMat& x, const CMat& y) {
        CMat z;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) {
                cdouble acc = 0.0;
                for (std::size_t k = 0; k < N; ++k) acc += x(r, k) * y(k, c);
                z(r, c) = acc;
            }
        return z;
    }

    friend bool operator==(const CMat&, const CMat&) = default;
};

using Mat2 = CMat<2>;
using Mat3 = CMat<3>;
using Mat6 = CMat<6>;

template <std::size_t N>
CMat<N> dagger(const CMat<N>& m) {
    CMat<N> d;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) d(r, c) = std::conj(m(c, r));
    return d;
}

template <std::size_t N>
cdouble trace(const CMat<N>& m) {
    cdouble t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += m(i, i);
    return t;
}

/// Max-entry norm of the difference, the metric used for unitarity checks.
template <std::size_t N>
double max_abs_diff(const CMat<N>& x, const CMat<N>& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

/// ||M^dagger M - I||_max; zero for a perfect unitary.
template <std::size_t N>
double unitarity_defect(const CMat<N>& m) {
    return max_abs_diff(dagger(m) * m, CMat<N>::identity());
}

}  // namespace triphoton

#endif  // TRIPHOTON_COMPLEXMAT_HPP
