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

#ifndef COVMUB_QUADRATURE_HPP
#define COVMUB_QUADRATURE_HPP

#include <optional>
#include <vector>

#include "covmub/linalg.hpp"
#include "covmub/multiplier.hpp"
#include "covmub/phase_space.hpp"
#include "covmub/weyl.hpp"

namespace covmub {

/// One projection per affine line, indexed like the lines of the plane.
class QuadratureSystem {
   public:
    /// Throws InconsistentDimension unless there are q(q + 1) square matrices of one size.
    QuadratureSystem(PhaseSpace space, std::vector<ComplexMatrix> projections);

    const PhaseSpace &space() const {
        return space_;
    }
    const std::vector<ComplexMatrix> &projections() const {
        return projections_;
    }
    const ComplexMatrix &projection(int line) const {
        return projections_.at(line);
    }
    int dim() const {
        return static_cast<int>(projections_.front().rows());
    }

   private:
    PhaseSpace space_;
    std::vector<ComplexMatrix> projections_;
};

/// Q(o + v + D) = (1/q) sum_{d in D} b(v, d) W(d). Throws NotIrreducible.
QuadratureSystem quadratures_from_weyl(const WeylSystem &system, PhaseVector origin = {});

struct AxiomReport {
    bool projections_ok = true;
    bool resolution_ok = true;
    bool unbiased_ok = true;
    bool spanning_ok = true;
    double projection_residual = 0.0;
    double resolution_residual = 0.0;
    double overlap_residual = 0.0;
    int span_rank = 0;
    /// First line failing the projection test, with the numerical rank of its matrix.
    int witness_line = -1;
    int witness_rank = -1;
    int witness_direction = -1;
    int witness_pair[2] = {-1, -1};

    bool ok() const {
        return projections_ok && resolution_ok && unbiased_ok && spanning_ok;
    }
    double worst_residual() const;
};

/// Rank-one projections, resolution of the identity per direction, overlap
/// 1/q between non-parallel lines, and spanning of the operator space.
AxiomReport verify_quadrature_axioms(const QuadratureSystem &system, Tolerance tol = {});

/// W_o(u) = sum over lines l parallel to u of b(u, base(l) - o) Q(l), W_o(0) = I.
/// Throws NotCovariant if the result does not translate Q covariantly.
WeylSystem centered_weyl_from_quadratures(const QuadratureSystem &system, PhaseVector origin, SymplecticForm form,
                                          Tolerance tol = {});

/// max over lines l and points v of |Q(l + v) - W(v) Q(l) W(v)^dagger|.
double translation_covariance_residual(const QuadratureSystem &system, const WeylSystem &weyl);
bool translation_covariance_check(const QuadratureSystem &system, const WeylSystem &weyl, Tolerance tol = {});

/// W(d) Q(o + D) = Q(o + D) for every direction D and d in D.
bool is_centered(const QuadratureSystem &system, const WeylSystem &weyl, PhaseVector origin, Tolerance tol = {});

/// The unique scale for which the centered operators are translation covariant.
/// Throws NoneFound or MultipleFound.
SymplecticForm induced_symplectic_form(const QuadratureSystem &system, PhaseVector origin = {}, Tolerance tol = {});

struct QuadratureInvariants {
    SymplecticForm form;
    MultiplierTable multiplier;
};

/// Induced form and the multiplier of the centered operators, checked to agree
/// at two different origins.
QuadratureInvariants quadrature_invariants(const QuadratureSystem &system, Tolerance tol = {});
MultiplierTable associated_multiplier(const QuadratureSystem &system, Tolerance tol = {});

struct Equivalence {
    bool equivalent = false;
    std::optional<ComplexMatrix> unitary;
    double residual = 0.0;
};

/// Q2(l) = U Q1(l) U^dagger for some unitary U iff the invariants agree; U is the
/// averaged intertwiner between the centered operators, recentred from origin1 to origin2.
Equivalence are_equivalent(const QuadratureSystem &first, const QuadratureSystem &second, PhaseVector origin1 = {},
                           PhaseVector origin2 = {}, Tolerance tol = {});

/// Q_g(l) = Q(g . l).
QuadratureSystem transform_quadratures(const QuadratureSystem &system, const AffineMap &g, PhaseVector origin = {});

/// Q2(l) = U Q1(l + shift[D]) U^dagger for l parallel to D.
struct Relabeling {
    std::vector<int> shifts;
    ComplexMatrix unitary;
    double residual = 0.0;
};

/// For two systems inducing the same form. Throws NotEquivalent if they do not.
Relabeling relabeling_witness(const QuadratureSystem &first, const QuadratureSystem &second, Tolerance tol = {});

/// Q2(l) = U Q1(A l + shift[D]) U^dagger for l parallel to D, with det A = scale2 / scale1.
struct RangeConjugacy {
    LinearMap2 map;
    std::vector<int> shifts;
    ComplexMatrix unitary;
    double residual = 0.0;
};

RangeConjugacy range_conjugacy_witness(const QuadratureSystem &first, const QuadratureSystem &second,
                                       Tolerance tol = {});

}  // namespace covmub

#endif
