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

#ifndef COVMUB_KERNELS_HPP
#define COVMUB_KERNELS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "covmub/linalg.hpp"

/// The exhaustive loops behind the library, each in two builds: `serial` is the
/// reference implementation, `parallel` distributes the outer loop with OpenMP.
/// Both return identical results (failure witnesses are always the first in
/// iteration order), which the test suite checks.
namespace covmub::kernels {

struct ProjectiveScan {
    /// Phase exponents m(u, v) in Z_modulus, row-major over point indices.
    std::vector<std::uint8_t> table;
    /// u * n + v of the first pair whose product is not a rounded scalar multiple, or -1.
    long long first_failure = -1;
    double worst_residual = 0.0;
};

struct OverlapScan {
    double max_deviation = 0.0;
    /// l1 * num_lines + l2 of the first non-parallel pair off target by more than tol, or -1.
    long long first_failure = -1;
};

namespace serial {

/// Flattened (g1 * n + g2) * n + g3 of the first triple violating
/// m(g1+g2, g3) + m(g1, g2) = m(g1, g2+g3) + m(g2, g3) mod modulus, or -1.
long long first_cocycle_failure(const std::uint8_t *table, int n, const std::uint16_t *addition, int modulus);

/// Reads off W(u) W(v) = conj(m(u, v)) W(u + v) with m rounded to the nearest modulus-th root of unity.
ProjectiveScan projective_multiplier(const std::vector<ComplexMatrix> &ops, const std::uint16_t *addition, int modulus,
                                     double tol);

/// |tr(P_a P_b) - target| over all pairs of lines with different directions.
OverlapScan unbiasedness(const std::vector<ComplexMatrix> &projections, std::span<const int> line_direction,
                         double target, double tol);

/// Indices in [0, count) accepted by keep, ascending.
std::vector<long long> filter_indices(long long count, const std::function<bool(long long)> &keep);

}  // namespace serial

namespace parallel {

long long first_cocycle_failure(const std::uint8_t *table, int n, const std::uint16_t *addition, int modulus);
ProjectiveScan projective_multiplier(const std::vector<ComplexMatrix> &ops, const std::uint16_t *addition, int modulus,
                                     double tol);
OverlapScan unbiasedness(const std::vector<ComplexMatrix> &projections, std::span<const int> line_direction,
                         double target, double tol);
std::vector<long long> filter_indices(long long count, const std::function<bool(long long)> &keep);

}  // namespace parallel

}  // namespace covmub::kernels

#endif
