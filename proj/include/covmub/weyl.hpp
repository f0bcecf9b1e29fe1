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

#ifndef COVMUB_WEYL_HPP
#define COVMUB_WEYL_HPP

#include <vector>

#include "covmub/linalg.hpp"
#include "covmub/multiplier.hpp"
#include "covmub/phase_space.hpp"

namespace covmub {

/// Unitaries W(v), one per point of the plane (indexed like the points), acting
/// on a common finite-dimensional space.
class WeylSystem {
   public:
    /// Throws InconsistentDimension unless there are q^2 square operators of one size.
    WeylSystem(PhaseSpace space, SymplecticForm form, std::vector<ComplexMatrix> ops);

    const PhaseSpace &space() const {
        return space_;
    }
    SymplecticForm form() const {
        return form_;
    }
    const std::vector<ComplexMatrix> &ops() const {
        return ops_;
    }
    const ComplexMatrix &op(int v) const {
        return ops_.at(v);
    }
    int dim() const {
        return static_cast<int>(ops_.front().rows());
    }

   private:
    PhaseSpace space_;
    SymplecticForm form_;
    std::vector<ComplexMatrix> ops_;
};

/// W(x1, x2) = X(x1) Z(scale * x2) on l^2(F), with [X(a) f](x) = f(x + a) and
/// [Z(b) f](x) = exp(2 pi i Tr(b x) / p) f(x). Its multiplier is canonical_multiplier.
WeylSystem clock_shift_system(const PhaseSpace &space, SymplecticForm form);

/// a(v) W0(v) where W0 is the clock-and-shift system and a twists its multiplier into m.
/// Throws NotAWeylMultiplier.
WeylSystem weyl_system_from_multiplier(const MultiplierTable &table, SymplecticForm form);

/// Multiplier read from the operator products, each phase rounded to the nearest
/// L-th root of unity. Throws InconsistentDimension or NotProjective.
MultiplierTable multiplier_of(const PhaseSpace &space, const std::vector<ComplexMatrix> &ops, Tolerance tol = {});
MultiplierTable multiplier_of(const WeylSystem &system, Tolerance tol = {});

/// Exponents mod p of the scalar b(u, v) with W(u) W(v) = b(u, v) W(v) W(u).
std::vector<std::uint8_t> commutation_bicharacter(const WeylSystem &system, Tolerance tol = {});

/// True iff the operators span the full matrix algebra.
bool is_irreducible(const std::vector<ComplexMatrix> &ops);

/// W'(v) = W(u) W(v) W(u)^dagger.
WeylSystem recentered(const WeylSystem &system, int shift);
/// a(v) W(v).
WeylSystem rephased(const WeylSystem &system, const PhaseFunction &phase);

/// The unitary U with W2(v) = U W1(v) U^dagger, obtained by averaging rank-one
/// seeds over the group and polar-normalising; global phase fixed so the first
/// nonzero entry (row-major) is real positive. Throws MultiplierMismatch,
/// NotIrreducible, DegenerateSeed.
ComplexMatrix intertwining_unitary(const WeylSystem &from, const WeylSystem &to, Tolerance tol = {},
                                   unsigned long long seed = 0);

/// max_v |W2(v) - U W1(v) U^dagger|.
double intertwining_residual(const WeylSystem &from, const WeylSystem &to, const ComplexMatrix &unitary);

/// Rescale U by a unit scalar so its first entry above 1e-6 in modulus is real positive.
ComplexMatrix normalize_global_phase(const ComplexMatrix &unitary);

}  // namespace covmub

#endif
