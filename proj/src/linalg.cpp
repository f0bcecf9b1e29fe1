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

#include "covmub/linalg.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace covmub {

Complex root_of_unity(long long k, int modulus) {
    long long r = k % modulus;
    if (r < 0) {
        r += modulus;
    }
    // Exact values on the axes keep the quarter-turn phases free of rounding.
    if (4 * r % modulus == 0) {
        switch (4 * r / modulus) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }
    double angle = 2 * std::numbers::pi * static_cast<double>(r) / modulus;
    return {std::cos(angle), std::sin(angle)};
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double max_abs(const ComplexMatrix &a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

int numerical_rank(const ComplexMatrix &a, double relative_tol) {
    if (a.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    const auto &s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) {
        return 0;
    }
    int rank = 0;
    for (int i = 0; i < s.size(); i++) {
        if (s(i) > relative_tol * s(0)) {
            rank++;
        }
    }
    return rank;
}

ComplexMatrix random_unitary(int dim, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            g(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix qm = qr.householderQ();
    ComplexMatrix rm = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; i++) {
        Complex d = rm(i, i);
        qm.col(i) *= d / std::abs(d);
    }
    return qm;
}

}  // namespace covmub
