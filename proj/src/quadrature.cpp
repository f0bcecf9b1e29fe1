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

#include "covmub/quadrature.hpp"

#include <algorithm>

#include "covmub/error.hpp"
#include "covmub/kernels.hpp"

namespace covmub {

QuadratureSystem::QuadratureSystem(PhaseSpace space, std::vector<ComplexMatrix> projections)
    : space_(std::move(space)), projections_(std::move(projections)) {
    if (static_cast<int>(projections_.size()) != space_.num_lines()) {
        throw Error(ErrorKind::InconsistentDimension, "a quadrature system needs one projection per line");
    }
    for (const auto &p : projections_) {
        if (p.rows() != p.cols() || p.rows() != projections_.front().rows() || p.rows() == 0) {
            throw Error(ErrorKind::InconsistentDimension, "projections must be square of a common size");
        }
    }
}

QuadratureSystem quadratures_from_weyl(const WeylSystem &system, PhaseVector origin) {
    if (!is_irreducible(system.ops())) {
        throw Error(ErrorKind::NotIrreducible, "quadratures are built from irreducible systems");
    }
    const PhaseSpace &space = system.space();
    int p = space.field().p();
    int o = space.index(origin);
    std::vector<ComplexMatrix> out;
    out.reserve(space.num_lines());
    for (int l = 0; l < space.num_lines(); l++) {
        const AffineLine &line = space.line(l);
        int v = space.sub(space.index(line.base), o);
        ComplexMatrix acc = ComplexMatrix::Zero(system.dim(), system.dim());
        for (int d : space.direction_points(line.direction)) {
            acc += root_of_unity(space.bicharacter(system.form(), v, d), p) * system.op(d);
        }
        out.push_back(acc / static_cast<double>(space.q()));
    }
    return QuadratureSystem(space, std::move(out));
}

double AxiomReport::worst_residual() const {
    return std::max({projection_residual, resolution_residual, overlap_residual});
}

AxiomReport verify_quadrature_axioms(const QuadratureSystem &system, Tolerance tol) {
    const PhaseSpace &space = system.space();
    AxiomReport report;
    int dim = system.dim();
    ComplexMatrix identity = ComplexMatrix::Identity(dim, dim);
    for (int l = 0; l < space.num_lines(); l++) {
        const ComplexMatrix &p = system.projection(l);
        double residual = std::max({std::abs(p.trace() - Complex(1.0)), max_abs_diff(p * p, p),
                                    max_abs_diff(p.adjoint(), p)});
        report.projection_residual = std::max(report.projection_residual, residual);
        if (residual > tol.identity && report.witness_line < 0) {
            report.projections_ok = false;
            report.witness_line = l;
            report.witness_rank = numerical_rank(p);
        }
    }
    for (int d = 0; d < space.num_directions(); d++) {
        ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
        for (int b = 0; b < space.q(); b++) {
            acc += system.projection(d * space.q() + b);
        }
        double residual = max_abs_diff(acc, identity);
        report.resolution_residual = std::max(report.resolution_residual, residual);
        if (residual > tol.identity && report.witness_direction < 0) {
            report.resolution_ok = false;
            report.witness_direction = d;
        }
    }
    std::vector<int> line_direction(space.num_lines());
    for (int l = 0; l < space.num_lines(); l++) {
        line_direction[l] = space.line(l).direction;
    }
    auto scan = kernels::parallel::unbiasedness(system.projections(), line_direction, 1.0 / space.q(), tol.identity);
    report.overlap_residual = scan.max_deviation;
    if (scan.first_failure >= 0) {
        report.unbiased_ok = false;
        report.witness_pair[0] = static_cast<int>(scan.first_failure / space.num_lines());
        report.witness_pair[1] = static_cast<int>(scan.first_failure % space.num_lines());
    }
    ComplexMatrix stacked(static_cast<long long>(dim) * dim, space.num_lines());
    for (int l = 0; l < space.num_lines(); l++) {
        stacked.col(l) = system.projection(l).reshaped();
    }
    report.span_rank = numerical_rank(stacked);
    report.spanning_ok = report.span_rank == dim * dim;
    return report;
}

namespace {

WeylSystem centered_operators(const QuadratureSystem &system, PhaseVector origin, SymplecticForm form) {
    const PhaseSpace &space = system.space();
    symplectic_form(space.field(), form.scale);
    int p = space.field().p();
    int o = space.index(origin);
    int dim = system.dim();
    std::vector<ComplexMatrix> ops;
    ops.reserve(space.size());
    ops.push_back(ComplexMatrix::Identity(dim, dim));
    for (int u = 1; u < space.size(); u++) {
        int d = space.direction_of(u);
        ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
        for (int b = 0; b < space.q(); b++) {
            int l = d * space.q() + b;
            int v = space.sub(space.index(space.line(l).base), o);
            acc += root_of_unity(space.bicharacter(form, u, v), p) * system.projection(l);
        }
        ops.push_back(std::move(acc));
    }
    return WeylSystem(space, form, std::move(ops));
}

}  // namespace

double translation_covariance_residual(const QuadratureSystem &system, const WeylSystem &weyl) {
    const PhaseSpace &space = system.space();
    double worst = 0.0;
    for (int v = 0; v < space.size(); v++) {
        const ComplexMatrix &w = weyl.op(v);
        ComplexMatrix w_adj = w.adjoint();
        for (int l = 0; l < space.num_lines(); l++) {
            worst = std::max(worst, max_abs_diff(system.projection(space.translate_line(l, v)),
                                                 w * system.projection(l) * w_adj));
        }
    }
    return worst;
}

bool translation_covariance_check(const QuadratureSystem &system, const WeylSystem &weyl, Tolerance tol) {
    return translation_covariance_residual(system, weyl) <= tol.identity;
}

bool is_centered(const QuadratureSystem &system, const WeylSystem &weyl, PhaseVector origin, Tolerance tol) {
    const PhaseSpace &space = system.space();
    int o = space.index(origin);
    for (int d = 0; d < space.num_directions(); d++) {
        const ComplexMatrix &proj = system.projection(space.line_through(d, o));
        for (int point : space.direction_points(d)) {
            if (max_abs_diff(weyl.op(point) * proj, proj) > tol.identity) {
                return false;
            }
        }
    }
    return true;
}

WeylSystem centered_weyl_from_quadratures(const QuadratureSystem &system, PhaseVector origin, SymplecticForm form,
                                          Tolerance tol) {
    WeylSystem weyl = centered_operators(system, origin, form);
    double residual = translation_covariance_residual(system, weyl);
    if (residual > tol.identity) {
        throw Error(ErrorKind::NotCovariant,
                    "centered operators miss translation covariance by " + std::to_string(residual));
    }
    return weyl;
}

SymplecticForm induced_symplectic_form(const QuadratureSystem &system, PhaseVector origin, Tolerance tol) {
    const Field &f = system.space().field();
    std::vector<SymplecticForm> found;
    for (int s = 1; s < f.q(); s++) {
        SymplecticForm form{f.element(s)};
        WeylSystem weyl = centered_operators(system, origin, form);
        if (translation_covariance_residual(system, weyl) <= tol.identity) {
            found.push_back(form);
        }
    }
    if (found.empty()) {
        throw Error(ErrorKind::NoneFound, "no symplectic form makes the system translation covariant");
    }
    if (found.size() > 1) {
        throw Error(ErrorKind::MultipleFound, "several symplectic forms fit the system");
    }
    return found.front();
}

QuadratureInvariants quadrature_invariants(const QuadratureSystem &system, Tolerance tol) {
    const PhaseSpace &space = system.space();
    SymplecticForm form = induced_symplectic_form(system, PhaseVector{}, tol);
    MultiplierTable table = multiplier_of(centered_weyl_from_quadratures(system, PhaseVector{}, form, tol), tol);
    PhaseVector other{space.field().one(), space.field().one()};
    MultiplierTable again = multiplier_of(centered_weyl_from_quadratures(system, other, form, tol), tol);
    if (!(table == again)) {
        throw Error(ErrorKind::NotCovariant, "associated multiplier depends on the origin");
    }
    return QuadratureInvariants{form, std::move(table)};
}

MultiplierTable associated_multiplier(const QuadratureSystem &system, Tolerance tol) {
    return quadrature_invariants(system, tol).multiplier;
}

namespace {

double conjugation_residual(const QuadratureSystem &target, const QuadratureSystem &source,
                            const ComplexMatrix &unitary, const std::vector<int> &source_line) {
    double worst = 0.0;
    ComplexMatrix adj = unitary.adjoint();
    for (int l = 0; l < target.space().num_lines(); l++) {
        worst = std::max(worst, max_abs_diff(target.projection(l), unitary * source.projection(source_line[l]) * adj));
    }
    return worst;
}

}  // namespace

Equivalence are_equivalent(const QuadratureSystem &first, const QuadratureSystem &second, PhaseVector origin1,
                           PhaseVector origin2, Tolerance tol) {
    if (!(first.space() == second.space())) {
        throw Error(ErrorKind::FieldMismatch, "quadrature systems over different fields");
    }
    if (first.dim() != second.dim()) {
        return Equivalence{};
    }
    auto inv1 = quadrature_invariants(first, tol);
    auto inv2 = quadrature_invariants(second, tol);
    if (inv1.form != inv2.form || !(inv1.multiplier == inv2.multiplier)) {
        return Equivalence{};
    }
    const PhaseSpace &space = first.space();
    WeylSystem w1 = centered_weyl_from_quadratures(first, origin1, inv1.form, tol);
    WeylSystem w2 = centered_weyl_from_quadratures(second, origin2, inv2.form, tol);
    int shift = space.sub(space.index(origin2), space.index(origin1));
    ComplexMatrix unitary = intertwining_unitary(recentered(w1, shift), w2, tol);
    std::vector<int> same(space.num_lines());
    for (int l = 0; l < space.num_lines(); l++) {
        same[l] = l;
    }
    double residual = conjugation_residual(second, first, unitary, same);
    if (residual > tol.identity) {
        throw Error(ErrorKind::NotEquivalent, "intertwiner of the centered operators fails on the projections");
    }
    return Equivalence{true, unitary, residual};
}

QuadratureSystem transform_quadratures(const QuadratureSystem &system, const AffineMap &g, PhaseVector origin) {
    const PhaseSpace &space = system.space();
    std::vector<ComplexMatrix> out;
    out.reserve(space.num_lines());
    for (int l = 0; l < space.num_lines(); l++) {
        out.push_back(system.projection(affine_action_on_line(space, g, l, origin)));
    }
    return QuadratureSystem(space, std::move(out));
}

Relabeling relabeling_witness(const QuadratureSystem &first, const QuadratureSystem &second, Tolerance tol) {
    if (!(first.space() == second.space())) {
        throw Error(ErrorKind::FieldMismatch, "quadrature systems over different fields");
    }
    const PhaseSpace &space = first.space();
    auto inv1 = quadrature_invariants(first, tol);
    auto inv2 = quadrature_invariants(second, tol);
    if (inv1.form != inv2.form) {
        throw Error(ErrorKind::NotEquivalent, "relabeling needs a common symplectic form");
    }
    SymplecticForm form = inv1.form;
    PhaseFunction phase = intertwiner(inv1.multiplier, inv2.multiplier, form);
    int modulus = phase_modulus(space.field());
    int weight = modulus / space.field().p();
    // Solve phase(d) = conj(b(d, shift)) on each direction.
    std::vector<int> shifts(space.num_directions(), -1);
    for (int d = 0; d < space.num_directions(); d++) {
        for (int v = 0; v < space.size() && shifts[d] < 0; v++) {
            bool match = true;
            for (int point : space.direction_points(d)) {
                int expected = ((-weight * space.bicharacter(form, point, v)) % modulus + modulus) % modulus;
                if (phase.values[point] != expected) {
                    match = false;
                    break;
                }
            }
            if (match) {
                shifts[d] = v;
            }
        }
        if (shifts[d] < 0) {
            throw Error(ErrorKind::NotEquivalent, "intertwiner is not a character on a direction");
        }
    }
    WeylSystem w1 = rephased(centered_weyl_from_quadratures(first, PhaseVector{}, form, tol), phase);
    WeylSystem w2 = centered_weyl_from_quadratures(second, PhaseVector{}, form, tol);
    ComplexMatrix unitary = intertwining_unitary(w1, w2, tol);
    std::vector<int> source(space.num_lines());
    for (int l = 0; l < space.num_lines(); l++) {
        source[l] = space.translate_line(l, shifts[space.line(l).direction]);
    }
    double residual = conjugation_residual(second, first, unitary, source);
    if (residual > tol.identity) {
        throw Error(ErrorKind::NotEquivalent, "relabeled systems are not unitarily conjugate");
    }
    return Relabeling{std::move(shifts), std::move(unitary), residual};
}

RangeConjugacy range_conjugacy_witness(const QuadratureSystem &first, const QuadratureSystem &second,
                                       Tolerance tol) {
    if (!(first.space() == second.space())) {
        throw Error(ErrorKind::FieldMismatch, "quadrature systems over different fields");
    }
    const PhaseSpace &space = first.space();
    const Field &f = space.field();
    SymplecticForm form1 = induced_symplectic_form(first, PhaseVector{}, tol);
    SymplecticForm form2 = induced_symplectic_form(second, PhaseVector{}, tol);
    LinearMap2 map{f.one(), f.zero(), f.zero(), f.div(form2.scale, form1.scale)};
    // second pulled back by the inverse map induces form1.
    QuadratureSystem pulled = transform_quadratures(second, AffineMap{inverse(f, map), PhaseVector{}});
    Relabeling relabel = relabeling_witness(first, pulled, tol);
    std::vector<int> shifts(space.num_directions());
    for (int d = 0; d < space.num_directions(); d++) {
        int image = space.direction_of(apply(space, map, space.index(space.direction(d).rep)));
        shifts[d] = relabel.shifts[image];
    }
    std::vector<int> source(space.num_lines());
    for (int l = 0; l < space.num_lines(); l++) {
        int mapped = affine_action_on_line(space, AffineMap{map, PhaseVector{}}, l);
        source[l] = space.translate_line(mapped, shifts[space.line(l).direction]);
    }
    double residual = conjugation_residual(second, first, relabel.unitary, source);
    if (residual > tol.identity) {
        throw Error(ErrorKind::NotEquivalent, "range conjugacy witness fails");
    }
    return RangeConjugacy{map, std::move(shifts), std::move(relabel.unitary), residual};
}

}  // namespace covmub
