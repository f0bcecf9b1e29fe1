// Copyright 2026 The covmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVMUB_KERNELS_DETAIL_HPP
#define COVMUB_KERNELS_DETAIL_HPP

#include <cmath>
#include <numbers>

#include "covmub/kernels.hpp"

namespace covmub::kernels::detail {

inline int cocycle_defect(const std::uint8_t *table, int n, const std::uint16_t *addition, int modulus, int g1, int g2,
                          int g3) {
    const std::size_t un = static_cast<std::size_t>(n);
    int lhs = table[addition[g1 * un + g2] * un + g3] + table[g1 * un + g2];
    int rhs = table[g1 * un + addition[g2 * un + g3]] + table[g2 * un + g3];
    return (lhs - rhs + 2 * modulus) % modulus;
}

struct PairReading {
    int exponent = 0;
    double residual = 0.0;
};

// conj(m) is the scalar c with W(u) W(v) = c W(u + v).
inline PairReading read_pair(const ComplexMatrix &wu, const ComplexMatrix &wv, const ComplexMatrix &wsum,
                             int modulus) {
    ComplexMatrix prod = wu * wv;
    Complex c = (wsum.adjoint() * prod).trace() / static_cast<double>(wsum.rows());
    double residual = (prod - c * wsum).cwiseAbs().maxCoeff();
    Complex m = std::conj(c);
    double turns = std::arg(m) / (2 * std::numbers::pi) * modulus;
    long long k = std::llround(turns);
    k = ((k % modulus) + modulus) % modulus;
    double angle = 2 * std::numbers::pi * static_cast<double>(k) / modulus;
    double phase_residual = std::abs(m - Complex(std::cos(angle), std::sin(angle)));
    return PairReading{static_cast<int>(k), std::max(residual, phase_residual)};
}

inline double overlap_deviation(const ComplexMatrix &a, const ComplexMatrix &b, double target) {
    Complex t = a.transpose().cwiseProduct(b).sum();
    return std::abs(t - target);
}

}  // namespace covmub::kernels::detail

#endif
