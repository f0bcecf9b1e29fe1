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

#include "covmub/weyl.hpp"

#include <numbers>
#include <random>

#include "covmub/error.hpp"
#include "covmub/kernels.hpp"

namespace covmub {

namespace {
constexpr double seed_threshold = 1e-6;
constexpr int random_seed_attempts = 16;
}  // namespace

WeylSystem::WeylSystem(PhaseSpace space, SymplecticForm form, std::vector<ComplexMatrix> ops)
    : space_(std::move(space)), form_(form), ops_(std::move(ops)) {
    if (static_cast<int>(ops_.size()) != space_.size()) {
        throw Error(ErrorKind::InconsistentDimension, "a Weyl system needs one operator per point");
    }
    for (const auto &op : ops_) {
        if (op.rows() != op.cols() || op.rows() != ops_.front().rows() || op.rows() == 0) {
            throw Error(ErrorKind::InconsistentDimension, "operators must be square of a common size");
        }
    }
}

WeylSystem clock_shift_system(const PhaseSpace &space, SymplecticForm form) {
    const Field &f = space.field();
    symplectic_form(f, form.scale);
    int q = f.q();
    std::vector<ComplexMatrix> ops;
    ops.reserve(space.size());
    for (int v = 0; v < space.size(); v++) {
        PhaseVector x = space.vector(v);
        Elem freq = f.mul(form.scale, x.x2);
        ComplexMatrix m = ComplexMatrix::Zero(q, q);
        for (int row = 0; row < q; row++) {
            Elem col = f.add(Elem{static_cast<std::uint16_t>(row)}, x.x1);
            m(row, col.index) = root_of_unity(f.trace(f.mul(freq, col)), f.p());
        }
        ops.push_back(std::move(m));
    }
    return WeylSystem(space, form, std::move(ops));
}

WeylSystem weyl_system_from_multiplier(const MultiplierTable &table, SymplecticForm form) {
    if (!is_weyl_multiplier(table, form)) {
        throw Error(ErrorKind::NotAWeylMultiplier, "table is not a Weyl multiplier for this form");
    }
    WeylSystem base = clock_shift_system(table.space(), form);
    PhaseFunction phase = coboundary_between(canonical_multiplier(table.space(), form), table);
    return rephased(base, phase);
}

MultiplierTable multiplier_of(const PhaseSpace &space, const std::vector<ComplexMatrix> &ops, Tolerance tol) {
    WeylSystem checked(space, SymplecticForm{space.field().one()}, ops);
    int modulus = phase_modulus(space.field());
    auto scan = kernels::parallel::projective_multiplier(ops, space.addition_table().data(), modulus, tol.phase);
    if (scan.first_failure >= 0) {
        throw Error(ErrorKind::NotProjective, "operators at points " + std::to_string(scan.first_failure / space.size()) +
                                                  ", " + std::to_string(scan.first_failure % space.size()) +
                                                  " do not multiply projectively");
    }
    return MultiplierTable(space, std::move(scan.table));
}

MultiplierTable multiplier_of(const WeylSystem &system, Tolerance tol) {
    return multiplier_of(system.space(), system.ops(), tol);
}

std::vector<std::uint8_t> commutation_bicharacter(const WeylSystem &system, Tolerance tol) {
    const PhaseSpace &space = system.space();
    int p = space.field().p();
    int n = space.size();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; u++) {
        for (int v = 0; v < n; v++) {
            ComplexMatrix forward = system.op(u) * system.op(v);
            ComplexMatrix backward = system.op(v) * system.op(u);
            Complex c = (backward.adjoint() * forward).trace() / static_cast<double>(system.dim());
            long long k = std::llround(std::arg(c) / (2 * std::numbers::pi) * p);
            k = ((k % p) + p) % p;
            if (max_abs_diff(forward, c * backward) > tol.phase || std::abs(c - root_of_unity(k, p)) > tol.phase) {
                throw Error(ErrorKind::NotProjective, "commutator is not a p-th root of unity");
            }
            out[static_cast<std::size_t>(u) * n + v] = static_cast<std::uint8_t>(k);
        }
    }
    return out;
}

bool is_irreducible(const std::vector<ComplexMatrix> &ops) {
    if (ops.empty()) {
        return false;
    }
    long long d = ops.front().rows();
    if (static_cast<long long>(ops.size()) < d * d) {
        return false;
    }
    ComplexMatrix stacked(d * d, static_cast<long long>(ops.size()));
    for (std::size_t i = 0; i < ops.size(); i++) {
        stacked.col(static_cast<long long>(i)) = ops[i].reshaped();
    }
    return numerical_rank(stacked) == d * d;
}

WeylSystem recentered(const WeylSystem &system, int shift) {
    const ComplexMatrix &w = system.op(shift);
    std::vector<ComplexMatrix> ops;
    ops.reserve(system.ops().size());
    for (const auto &op : system.ops()) {
        ops.push_back(w * op * w.adjoint());
    }
    return WeylSystem(system.space(), system.form(), std::move(ops));
}

WeylSystem rephased(const WeylSystem &system, const PhaseFunction &phase) {
    int modulus = phase_modulus(system.space().field());
    std::vector<ComplexMatrix> ops;
    ops.reserve(system.ops().size());
    for (std::size_t v = 0; v < system.ops().size(); v++) {
        ops.push_back(root_of_unity(phase.values.at(v), modulus) * system.ops()[v]);
    }
    return WeylSystem(system.space(), system.form(), std::move(ops));
}

ComplexMatrix normalize_global_phase(const ComplexMatrix &unitary) {
    for (long long i = 0; i < unitary.rows(); i++) {
        for (long long j = 0; j < unitary.cols(); j++) {
            Complex x = unitary(i, j);
            if (std::abs(x) > seed_threshold) {
                return unitary * (std::conj(x) / std::abs(x));
            }
        }
    }
    return unitary;
}

double intertwining_residual(const WeylSystem &from, const WeylSystem &to, const ComplexMatrix &unitary) {
    double worst = 0.0;
    for (std::size_t v = 0; v < from.ops().size(); v++) {
        worst = std::max(worst, max_abs_diff(to.ops()[v], unitary * from.ops()[v] * unitary.adjoint()));
    }
    return worst;
}

ComplexMatrix intertwining_unitary(const WeylSystem &from, const WeylSystem &to, Tolerance tol,
                                   unsigned long long seed) {
    if (!(from.space() == to.space())) {
        throw Error(ErrorKind::FieldMismatch, "Weyl systems over different fields");
    }
    if (from.dim() != to.dim()) {
        throw Error(ErrorKind::InconsistentDimension, "Weyl systems act on spaces of different dimension");
    }
    if (!(multiplier_of(from, tol) == multiplier_of(to, tol))) {
        throw Error(ErrorKind::MultiplierMismatch, "Weyl systems carry different multipliers");
    }
    if (!is_irreducible(from.ops())) {
        throw Error(ErrorKind::NotIrreducible, "the source system is reducible");
    }
    int d = from.dim();
    int n = static_cast<int>(from.ops().size());
    auto average = [&](const ComplexMatrix &seed_matrix) {
        ComplexMatrix acc = ComplexMatrix::Zero(d, d);
        for (int v = 0; v < n; v++) {
            acc += to.ops()[v] * seed_matrix * from.ops()[v].adjoint();
        }
        return acc;
    };
    ComplexMatrix averaged;
    bool found = false;
    for (int i = 0; i < d && !found; i++) {
        for (int j = 0; j < d && !found; j++) {
            ComplexMatrix acc = ComplexMatrix::Zero(d, d);
            for (int v = 0; v < n; v++) {
                acc += to.ops()[v].col(i) * from.ops()[v].col(j).adjoint();
            }
            if (max_abs(acc) > seed_threshold) {
                averaged = std::move(acc);
                found = true;
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int attempt = 0; attempt < random_seed_attempts && !found; attempt++) {
        ComplexMatrix e(d, d);
        for (int i = 0; i < d; i++) {
            for (int j = 0; j < d; j++) {
                e(i, j) = Complex(normal(rng), normal(rng));
            }
        }
        averaged = average(e);
        found = max_abs(averaged) > seed_threshold;
    }
    if (!found) {
        throw Error(ErrorKind::DegenerateSeed, "every seed averaged to zero");
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(averaged, Eigen::ComputeFullU | Eigen::ComputeFullV);
    ComplexMatrix unitary = normalize_global_phase(svd.matrixU() * svd.matrixV().adjoint());
    double residual = intertwining_residual(from, to, unitary);
    if (residual > tol.identity) {
        throw Error(ErrorKind::NotEquivalent, "averaged unitary misses by " + std::to_string(residual));
    }
    return unitary;
}

}  // namespace covmub
