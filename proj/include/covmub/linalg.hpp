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

#ifndef COVMUB_LINALG_HPP
#define COVMUB_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace covmub {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Pinned tolerances: identities are checked to `identity`, rounding of measured
/// phases to roots of unity is accepted within `phase`.
struct Tolerance {
    double identity = 1e-9;
    double phase = 1e-6;
};

/// exp(2 pi i k / modulus).
Complex root_of_unity(long long k, int modulus);

/// Largest entry modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs(const ComplexMatrix &a);

/// Numerical rank from singular values relative to the largest one.
int numerical_rank(const ComplexMatrix &a, double relative_tol = 1e-9);

/// Haar-random unitary from a seeded generator (QR of a complex Gaussian matrix).
ComplexMatrix random_unitary(int dim, unsigned long long seed);

}  // namespace covmub

#endif
