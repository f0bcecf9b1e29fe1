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

#ifndef COVMUB_SYMPLECTIC_HPP
#define COVMUB_SYMPLECTIC_HPP

#include <vector>

#include "covmub/linalg.hpp"
#include "covmub/multiplier.hpp"
#include "covmub/phase_space.hpp"
#include "covmub/quadrature.hpp"
#include "covmub/weyl.hpp"

namespace covmub {

/// All determinant-one matrices, in order of (a11, a12, a21, a22) indices.
/// Throws FieldTooLarge for q > 9.
std::vector<LinearMap2> sl_enumerate(const Field &field);

/// X^2 - tr(A) X + 1 has no root in the field. Throws NotUnimodular.
bool is_nonsplit(const Field &field, const LinearMap2 &map);
/// Some direction is mapped to itself.
bool fixes_some_direction(const PhaseSpace &space, const LinearMap2 &map);

/// Cyclic nonsplit torus of order q + 1; elements[k] = generator^k.
struct Torus {
    LinearMap2 generator;
    std::vector<LinearMap2> elements;
};

/// Generator [[z + conj(z), 1], [-1, 0]] for the norm-one generator z of the
/// quadratic extension.
Torus maximal_nonsplit_torus(const Field &field);

/// Throws NotATorus unless the set is a cyclic group of order q + 1 whose
/// nonidentity elements are all nonsplit.
void validate_torus(const Field &field, const std::vector<LinearMap2> &elements);

/// Orbits of the group on direction indices, each sorted, ordered by smallest member.
std::vector<std::vector<int>> orbits_on_directions(const PhaseSpace &space, const std::vector<LinearMap2> &group);

/// U(A) = (c / q) sum_u m(u, (A - I)^{-1} u) W(u) with c = scale, verified to satisfy
/// W(A v) = U(A) W(v) U(A)^dagger. Throws NotInvariantMultiplier, SingularAminusI, NotCovariant.
ComplexMatrix metaplectic_operator(const WeylSystem &system, const LinearMap2 &map, Complex scale = 1.0,
                                   Tolerance tol = {});

/// max_v |W(A v) - U W(v) U^dagger|.
double metaplectic_residual(const WeylSystem &system, const LinearMap2 &map, const ComplexMatrix &op);

/// An ordinary representation of a cyclic torus: ops[k] = (c U)^k with c the
/// principal n-th root of conj(zeta), where U^n = zeta I.
struct TorusRepresentation {
    std::vector<ComplexMatrix> ops;
    Complex scale;
    Complex power_scalar;
};

/// Throws NotScalarPower if U^n is not scalar.
TorusRepresentation ordinary_phase_fix(const Torus &torus, const ComplexMatrix &generator_op, Tolerance tol = {});

/// Metaplectic operators on a torus, phase-fixed into an ordinary representation.
TorusRepresentation metaplectic_torus_representation(const WeylSystem &system, const Torus &torus,
                                                     Tolerance tol = {});

/// max over A in group and lines l of |Q(A l) - U(A) Q(l) U(A)^dagger|.
double covariance_residual(const QuadratureSystem &system, const std::vector<LinearMap2> &group,
                           const std::vector<ComplexMatrix> &ops);
bool covariant_quadrature_check(const QuadratureSystem &system, const std::vector<LinearMap2> &group,
                                const std::vector<ComplexMatrix> &ops, Tolerance tol = {});

/// Unitaries U_A with U_A W(v) U_A^dagger = a(A, v) W(A v) for every A in SL(V),
/// and the defect a(AB, v) - a(A, Bv) - a(B, v) of the chosen phases.
struct SlProbe {
    std::vector<LinearMap2> group;
    std::vector<PhaseFunction> phases;
    std::vector<ComplexMatrix> unitaries;
    /// Pairs (A, B) whose defect is not identically trivial.
    long long defective_pairs = 0;
    /// For q = 2 the phases are re-gauged by characters of V to remove the defect when possible.
    bool gauge_searched = false;
    bool defect_free = false;
    /// A defect found in the default gauge without a search says nothing about
    /// other gauges, so only defect-free or searched results are conclusive.
    bool conclusive() const {
        return defect_free || gauge_searched;
    }
};

/// Throws FieldTooLarge for q > 4.
SlProbe sl_extension_probe(const WeylSystem &system, Tolerance tol = {});

}  // namespace covmub

#endif
