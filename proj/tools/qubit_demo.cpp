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

#include "qubit_demo.hpp"

#include <cmath>

#include "covmub/multiplier.hpp"
#include "covmub/quadrature.hpp"
#include "covmub/symplectic.hpp"
#include "covmub/weyl.hpp"

namespace covmub {

namespace {

constexpr double tol = 1e-9;

ComplexMatrix pauli(int which) {
    ComplexMatrix m(2, 2);
    const Complex i(0, 1);
    switch (which) {
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, -i, i, 0;
            break;
        case 3:
            m << 1, 0, 0, -1;
            break;
        default:
            m << 1, 0, 0, 1;
    }
    return m;
}

ComplexMatrix half_sum(int sign, int which) {
    return 0.5 * (pauli(0) + static_cast<double>(sign) * pauli(which));
}

}  // namespace

std::vector<DemoCheck> run_qubit_demo() {
    std::vector<DemoCheck> checks;
    auto record = [&](const std::string &name, double residual) {
        checks.push_back(DemoCheck{name, residual <= tol, residual});
    };
    auto record_bool = [&](const std::string &name, bool ok) { checks.push_back(DemoCheck{name, ok, 0.0}); };

    Field f = Field::make(2, 1);
    PhaseSpace space(f);
    SymplecticForm form{f.one()};
    const int e1 = space.index(space.vector(1, 0));
    const int e2 = space.index(space.vector(0, 1));
    const int e12 = space.index(space.vector(1, 1));
    std::vector<ComplexMatrix> ops(4);
    ops[0] = pauli(0);
    ops[e1] = pauli(1);
    ops[e2] = pauli(2);
    ops[e12] = pauli(3);
    WeylSystem pauli_system(space, form, ops);

    // m(e1, e2) = m(e1+e2, e1) = m(e2, e1+e2) = -i, the reversed pairs give +i.
    std::vector<std::uint8_t> expected(16, 0);
    auto set = [&](int u, int v, int k) { expected[u * 4 + v] = static_cast<std::uint8_t>(k); };
    set(e1, e2, 3);
    set(e12, e1, 3);
    set(e2, e12, 3);
    set(e2, e1, 1);
    set(e1, e12, 1);
    set(e12, e2, 1);
    MultiplierTable expected_table(space, expected);
    MultiplierTable measured = multiplier_of(pauli_system);
    record_bool("pauli multiplier table", measured == expected_table);
    record_bool("pauli multiplier is a Weyl multiplier", is_weyl_multiplier(measured, form));
    auto family = enumerate_weyl_multipliers(space, form);
    bool listed = false;
    for (long long k = 0; k < family.size(); k++) {
        listed = listed || family[k] == measured;
    }
    record_bool("exactly two Weyl multipliers, pauli one among them", family.size() == 2 && listed);

    QuadratureSystem system = quadratures_from_weyl(pauli_system);
    auto line = [&](int a1, int a2, int b1, int b2) {
        int p = space.index(space.vector(a1, a2));
        int r = space.index(space.vector(b1, b2));
        return space.line_through(space.direction_of(space.sub(r, p)), p);
    };
    struct Golden {
        int line;
        ComplexMatrix projection;
    };
    std::vector<Golden> golden = {
        {line(0, 0, 1, 0), half_sum(1, 1)},  {line(0, 1, 1, 1), half_sum(-1, 1)},
        {line(0, 0, 0, 1), half_sum(1, 2)},  {line(1, 0, 1, 1), half_sum(-1, 2)},
        {line(0, 0, 1, 1), half_sum(1, 3)},  {line(1, 0, 0, 1), half_sum(-1, 3)},
    };
    double worst = 0.0;
    for (const auto &g : golden) {
        worst = std::max(worst, max_abs_diff(system.projection(g.line), g.projection));
    }
    record("six projections match (I +- sigma)/2", worst);
    record("quadrature axioms", verify_quadrature_axioms(system).ok() ? 0.0 : 1.0);

    // Swapping sigma1 and sigma2 gives the other multiplier.
    std::vector<ComplexMatrix> swapped_ops = ops;
    std::swap(swapped_ops[e1], swapped_ops[e2]);
    QuadratureSystem swapped = quadratures_from_weyl(WeylSystem(space, form, swapped_ops));
    MultiplierTable swapped_table = associated_multiplier(swapped);
    record_bool("swapped system carries the conjugate multiplier", swapped_table == measured.conjugate());
    record_bool("swapped system is inequivalent", !are_equivalent(system, swapped).equivalent);

    LinearMap2 flip{f.zero(), f.one(), f.one(), f.zero()};
    LinearMap2 rotation{f.one(), f.one(), f.one(), f.zero()};
    QuadratureSystem flipped = transform_quadratures(system, AffineMap{flip, PhaseVector{}});
    double flip_gap = 0.0;
    for (int l = 0; l < space.num_lines(); l++) {
        flip_gap = std::max(flip_gap, max_abs_diff(flipped.projection(l), swapped.projection(l)));
    }
    record("flip acting on lines gives the swapped system", flip_gap);

    Torus torus = maximal_nonsplit_torus(f);
    record_bool("torus generator is the rotation", torus.generator == rotation);
    bool invariant = true;
    for (const auto &a : torus.elements) {
        invariant = invariant && pullback(measured, a) == measured && pullback(swapped_table, a) == swapped_table;
    }
    record_bool("both multipliers are torus invariant", invariant);

    const Complex i(0, 1);
    ComplexMatrix rotation_op = 0.5 * (pauli(0) + i * (pauli(1) + pauli(2) + pauli(3)));
    ComplexMatrix raw = metaplectic_operator(pauli_system, rotation);
    record("U(R) = (I + i(sigma1 + sigma2 + sigma3))/2", max_abs_diff(raw, rotation_op));
    record("U(R) covariance", metaplectic_residual(pauli_system, rotation, raw));
    TorusRepresentation rep = ordinary_phase_fix(torus, raw);
    record("c(R)^3 = -1", std::abs(std::pow(rep.scale, 3) + 1.0));
    double rep_gap = 0.0;
    for (std::size_t a = 0; a < torus.elements.size(); a++) {
        for (std::size_t b = 0; b < torus.elements.size(); b++) {
            std::size_t ab = (a + b) % torus.elements.size();
            rep_gap = std::max(rep_gap, max_abs_diff(rep.ops[a] * rep.ops[b], rep.ops[ab]));
        }
    }
    record("phase-fixed torus operators form a representation", rep_gap);

    // U(F) = exp(i pi/2 m.sigma) with m = (1, -1, 0)/sqrt(2).
    ComplexMatrix flip_op = i * (pauli(1) - pauli(2)) / std::sqrt(2.0);
    record("U(F)^2 = -I", max_abs_diff(flip_op * flip_op, -pauli(0)));
    double flip_cov = 0.0;
    for (int v = 1; v < 4; v++) {
        flip_cov = std::max(flip_cov, max_abs_diff(flip_op * ops[v] * flip_op.adjoint(), -ops[apply(space, flip, v)]));
    }
    record("U(F) W(v) U(F)^dagger = -W(Fv) for v != 0", flip_cov);
    // With c(R) = -1, U(F^-1) = U(F) and U(R^-1) = U(R)^2.
    ComplexMatrix fixed_rotation = -raw;
    record("U(F) U(R) U(F^-1) = -U(F R F^-1)",
           max_abs_diff(flip_op * fixed_rotation * flip_op, -(fixed_rotation * fixed_rotation)));

    struct Miss {
        int from;
        int to;
    };
    std::vector<Miss> misses = {{line(0, 0, 1, 0), line(1, 0, 1, 1)},
                                {line(0, 1, 1, 1), line(0, 0, 0, 1)},
                                {line(0, 0, 1, 1), line(0, 1, 1, 0)}};
    double image_gap = 0.0;
    bool all_differ = true;
    for (const auto &m : misses) {
        ComplexMatrix image = flip_op * system.projection(m.from) * flip_op.adjoint();
        image_gap = std::max(image_gap, max_abs_diff(image, system.projection(m.to)));
        all_differ = all_differ && max_abs_diff(image, flipped.projection(m.from)) > 0.5;
    }
    record("U(F) sends the three lines to the listed images", image_gap);
    record_bool("U(F) does not intertwine Q with Q_F on those lines", all_differ);
    return checks;
}

}  // namespace covmub
