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

#include "kernels_detail.hpp"

namespace covmub::kernels::serial {

long long first_cocycle_failure(const std::uint8_t *table, int n, const std::uint16_t *addition, int modulus) {
    for (int g1 = 0; g1 < n; g1++) {
        for (int g2 = 0; g2 < n; g2++) {
            for (int g3 = 0; g3 < n; g3++) {
                if (detail::cocycle_defect(table, n, addition, modulus, g1, g2, g3) != 0) {
                    return (static_cast<long long>(g1) * n + g2) * n + g3;
                }
            }
        }
    }
    return -1;
}

ProjectiveScan projective_multiplier(const std::vector<ComplexMatrix> &ops, const std::uint16_t *addition, int modulus,
                                     double tol) {
    const int n = static_cast<int>(ops.size());
    ProjectiveScan out;
    out.table.assign(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; u++) {
        for (int v = 0; v < n; v++) {
            auto reading = detail::read_pair(ops[u], ops[v], ops[addition[u * n + v]], modulus);
            out.table[u * n + v] = static_cast<std::uint8_t>(reading.exponent);
            out.worst_residual = std::max(out.worst_residual, reading.residual);
            if (reading.residual > tol && out.first_failure < 0) {
                out.first_failure = static_cast<long long>(u) * n + v;
            }
        }
    }
    return out;
}

OverlapScan unbiasedness(const std::vector<ComplexMatrix> &projections, std::span<const int> line_direction,
                         double target, double tol) {
    const int n = static_cast<int>(projections.size());
    OverlapScan out;
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            if (line_direction[a] == line_direction[b]) {
                continue;
            }
            double dev = detail::overlap_deviation(projections[a], projections[b], target);
            out.max_deviation = std::max(out.max_deviation, dev);
            if (dev > tol && out.first_failure < 0) {
                out.first_failure = static_cast<long long>(a) * n + b;
            }
        }
    }
    return out;
}

std::vector<long long> filter_indices(long long count, const std::function<bool(long long)> &keep) {
    std::vector<long long> out;
    for (long long i = 0; i < count; i++) {
        if (keep(i)) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace covmub::kernels::serial
