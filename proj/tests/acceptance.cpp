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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "covmub/error.hpp"
#include "covmub/multiplier.hpp"
#include "covmub/quadrature.hpp"
#include "covmub/symplectic.hpp"
#include "covmub/weyl.hpp"
#include "qubit_demo.hpp"

using namespace covmub;

namespace {

constexpr double residual_tol = 1e-9;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok && passed) {
            passed = false;
            detail << "first failure: " << what << "; ";
        }
    }
};

PhaseSpace space_of(int q) {
    return PhaseSpace(Field::parse(std::to_string(q)));
}

std::vector<SymplecticForm> all_forms(const Field &f) {
    std::vector<SymplecticForm> out;
    for (int s = 1; s < f.q(); s++) {
        out.push_back(symplectic_form(f, f.element(s)));
    }
    return out;
}

QuadratureSystem system_for(const MultiplierTable &table, SymplecticForm form) {
    return quadratures_from_weyl(weyl_system_from_multiplier(table, form));
}

// Multiplier census: counts, exhaustive Weyl check, GF(2) brute force.
void census(Outcome &o) {
    const std::vector<std::pair<int, long long>> expected = {{2, 2}, {3, 9}, {4, 64}, {5, 625}};
    for (auto [q, count] : expected) {
        PhaseSpace space = space_of(q);
        SymplecticForm form = symplectic_form(space.field(), space.field().one());
        auto family = enumerate_weyl_multipliers(space, form);
        o.require(family.size() == count, "count for q=" + std::to_string(q));
        std::set<std::vector<std::uint8_t>> distinct;
        for (long long k = 0; k < family.size(); k++) {
            auto table = family[k];
            o.require(is_weyl_multiplier(table, form), "table " + std::to_string(k) + " for q=" + std::to_string(q));
            distinct.insert(table.values());
        }
        o.require(static_cast<long long>(distinct.size()) == count, "distinct tables for q=" + std::to_string(q));
        o.detail << "q=" << q << ":" << family.size() << " ";
    }

    // Every Z_4-valued table on GF(2)^2; the normalisation m(0, v) = m(v, 0) = 0
    // and m(v, v) = 0 is part of the axioms, leaving six free entries.
    PhaseSpace space = space_of(2);
    SymplecticForm form = symplectic_form(space.field(), space.field().one());
    std::set<std::vector<std::uint8_t>> found;
    for (int code = 0; code < (1 << 12); code++) {
        std::vector<std::uint8_t> values(16, 0);
        int shift = 0;
        for (int u = 1; u < 4; u++) {
            for (int v = 1; v < 4; v++) {
                if (u != v) {
                    values[u * 4 + v] = static_cast<std::uint8_t>((code >> shift) & 3);
                    shift += 2;
                }
            }
        }
        MultiplierTable table(space, values);
        if (is_multiplier(table) && is_weyl_multiplier(table, form)) {
            found.insert(values);
        }
    }
    auto family = enumerate_weyl_multipliers(space, form);
    std::set<std::vector<std::uint8_t>> listed{family[0].values(), family[1].values()};
    o.require(found == listed, "GF(2) brute force disagrees with the enumeration");
    o.detail << "brute-force GF(2):" << found.size();
}

// Quadrature axioms for generated systems.
void axioms(Outcome &o) {
    double worst = 0.0;
    int checked = 0;
    for (int q : {2, 3, 4}) {
        PhaseSpace space = space_of(q);
        SymplecticForm form = symplectic_form(space.field(), space.field().one());
        auto family = enumerate_weyl_multipliers(space, form);
        std::vector<long long> picks;
        if (q == 4) {
            picks = {0, 13, 26, 39, 63};
        } else {
            for (long long k = 0; k < family.size(); k++) {
                picks.push_back(k);
            }
        }
        for (long long k : picks) {
            auto report = verify_quadrature_axioms(system_for(family[k], form));
            o.require(report.ok(), "axioms for q=" + std::to_string(q) + " index " + std::to_string(k));
            o.require(report.span_rank == q * q, "span rank");
            o.require(report.worst_residual() <= residual_tol, "residual");
            worst = std::max(worst, report.worst_residual());
            checked++;
        }
    }
    o.detail << checked << " systems, worst residual " << worst;
}

// Class count by pairing systems with their invariants.
void classification(Outcome &o) {
    for (auto [q, total] : std::vector<std::pair<int, int>>{{2, 2}, {3, 18}}) {
        PhaseSpace space = space_of(q);
        std::set<std::pair<int, std::vector<std::uint8_t>>> classes;
        int systems = 0;
        for (SymplecticForm form : all_forms(space.field())) {
            auto family = enumerate_weyl_multipliers(space, form);
            for (long long k = 0; k < family.size(); k++) {
                auto table = family[k];
                auto inv = quadrature_invariants(system_for(table, form));
                o.require(inv.form == form, "induced form");
                o.require(inv.multiplier == table, "associated multiplier");
                classes.insert({inv.form.scale.index, inv.multiplier.values()});
                systems++;
            }
        }
        int formula = (q - 1);
        for (int i = 0; i < q - 1; i++) {
            formula *= q;
        }
        o.require(static_cast<int>(classes.size()) == total && formula == total,
                  "class total for q=" + std::to_string(q));
        o.detail << "q=" << q << ":" << classes.size() << " classes from " << systems << " systems ";
    }
}

// Invariance under the full unimodular group.
void invariance(Outcome &o) {
    for (int q : {2, 3, 4, 5}) {
        PhaseSpace space = space_of(q);
        auto group = sl_enumerate(space.field());
        for (SymplecticForm form : all_forms(space.field())) {
            auto found = invariant_multipliers(space, form, group);
            if (space.field().p() == 2) {
                o.require(found.empty(), "nonempty invariant set for q=" + std::to_string(q));
            } else {
                o.require(found.size() == 1 && found[0] == symmetric_multiplier(space, form),
                          "invariant set for q=" + std::to_string(q));
            }
        }
        auto one = invariant_multipliers(space, symplectic_form(space.field(), space.field().one()), group);
        o.detail << "q=" << q << ":" << one.size() << " ";
    }
}

// Intertwiners between Weyl systems.
void stone_von_neumann(Outcome &o) {
    double worst = 0.0;
    int refused = 0;
    for (int q : {2, 3, 4}) {
        PhaseSpace space = space_of(q);
        SymplecticForm form = symplectic_form(space.field(), space.field().one());
        auto family = enumerate_weyl_multipliers(space, form);
        for (int i = 0; i < 10; i++) {
            long long k = (7 * i) % family.size();
            auto w = weyl_system_from_multiplier(family[k], form);
            ComplexMatrix v = random_unitary(q, 100 + i);
            auto shifted = recentered(w, i % space.size());
            std::vector<ComplexMatrix> ops;
            for (const auto &op : shifted.ops()) {
                ops.push_back(v * op * v.adjoint());
            }
            WeylSystem target(space, form, ops);
            ComplexMatrix u = intertwining_unitary(w, target);
            double residual = intertwining_residual(w, target, u);
            double unitarity = max_abs_diff(u * u.adjoint(), ComplexMatrix::Identity(q, q));
            o.require(residual <= residual_tol && unitarity <= residual_tol, "same-multiplier pair");
            worst = std::max({worst, residual, unitarity});

            long long other = (k + 1 + i) % family.size();
            if (other == k) {
                other = (k + 1) % family.size();
            }
            auto w2 = weyl_system_from_multiplier(family[other], form);
            try {
                intertwining_unitary(w, w2);
                o.require(false, "cross-multiplier pair was intertwined");
            } catch (const Error &e) {
                o.require(e.kind() == ErrorKind::MultiplierMismatch, "wrong refusal kind");
                refused++;
            }
        }
    }
    o.detail << "30 pairs, worst residual " << worst << ", " << refused << " cross pairs refused";
}

// Torus order and orbits on directions.
void torus_structure(Outcome &o) {
    for (int q : {2, 3, 4, 5}) {
        PhaseSpace space = space_of(q);
        Torus torus = maximal_nonsplit_torus(space.field());
        o.require(static_cast<int>(torus.elements.size()) == q + 1, "torus order");
        LinearMap2 power = torus.generator;
        int order = 1;
        while (power != identity_map(space.field())) {
            power = compose(space.field(), power, torus.generator);
            order++;
        }
        o.require(order == q + 1, "generator order");
        auto orbits = orbits_on_directions(space, torus.elements);
        if (space.field().p() == 2) {
            o.require(orbits.size() == 1 && static_cast<int>(orbits[0].size()) == q + 1, "one orbit");
        } else {
            o.require(orbits.size() == 2, "two orbits");
            for (const auto &orbit : orbits) {
                o.require(static_cast<int>(orbit.size()) == (q + 1) / 2, "orbit size");
            }
        }
        o.detail << "q=" << q << ": order " << order << ", " << orbits.size() << " orbit(s) ";
    }
}

// Metaplectic operators for the torus generator and the ordinary phase fix.
void metaplectic(Outcome &o) {
    for (int q : {2, 3}) {
        PhaseSpace space = space_of(q);
        const Field &f = space.field();
        SymplecticForm form = symplectic_form(f, f.one());
        auto table = q == 2 ? dual_basis_multiplier(space, form) : symmetric_multiplier(space, form);
        auto w = weyl_system_from_multiplier(table, form);
        Torus torus = maximal_nonsplit_torus(f);
        ComplexMatrix u = metaplectic_operator(w, torus.generator);
        double residual = metaplectic_residual(w, torus.generator, u);
        o.require(residual <= residual_tol, "covariance of the metaplectic operator");
        auto rep = ordinary_phase_fix(torus, u);
        double worst = 0.0;
        int n = q + 1;
        for (int a = 0; a < n; a++) {
            for (int b = 0; b < n; b++) {
                worst = std::max(worst, max_abs_diff(rep.ops[a] * rep.ops[b], rep.ops[(a + b) % n]));
            }
            worst = std::max(worst, metaplectic_residual(w, torus.elements[a], rep.ops[a]));
        }
        o.require(worst <= residual_tol, "ordinary representation of the torus");
        o.detail << "q=" << q << ": residual " << std::max(residual, worst);
        if (q == 2) {
            Complex cube = std::pow(rep.scale, 3);
            o.require(std::abs(cube + 1.0) <= residual_tol, "c(R)^3 = -1");
            o.detail << ", c^3 = (" << cube.real() << "," << cube.imag() << ") ";
        } else {
            o.detail << " ";
        }
    }
}

// The worked single-qubit example.
void qubit(Outcome &o) {
    int passed = 0;
    auto checks = run_qubit_demo();
    for (const auto &check : checks) {
        o.require(check.passed, check.name);
        passed += check.passed;
    }
    o.detail << passed << "/" << checks.size() << " checks";
}

// Range conjugacy, with the witness re-verified line by line here.
void range_conjugacy(Outcome &o) {
    auto verify = [&](const QuadratureSystem &first, const QuadratureSystem &second) {
        const PhaseSpace &space = first.space();
        auto witness = range_conjugacy_witness(first, second);
        double worst = 0.0;
        ComplexMatrix adj = witness.unitary.adjoint();
        for (int l = 0; l < space.num_lines(); l++) {
            int mapped = affine_action_on_line(space, AffineMap{witness.map, PhaseVector{}}, l);
            int source = space.translate_line(mapped, witness.shifts[space.line(l).direction]);
            worst = std::max(worst, max_abs_diff(second.projection(l),
                                                 witness.unitary * first.projection(source) * adj));
        }
        double unitarity = max_abs_diff(witness.unitary * adj,
                                        ComplexMatrix::Identity(first.dim(), first.dim()));
        o.require(worst <= residual_tol && unitarity <= residual_tol, "witness fails on some line");
        o.require(determinant(space.field(), witness.map) != space.field().zero(), "singular map");
        return worst;
    };
    PhaseSpace gf2 = space_of(2);
    SymplecticForm one2 = symplectic_form(gf2.field(), gf2.field().one());
    auto family = enumerate_weyl_multipliers(gf2, one2);
    auto q0 = system_for(family[0], one2);
    auto q1 = system_for(family[1], one2);
    double r = std::max(verify(q0, q1), verify(q1, q0));
    o.detail << "GF(2) classes 0<->1 residual " << r;

    PhaseSpace gf3 = space_of(3);
    SymplecticForm one3 = symplectic_form(gf3.field(), gf3.field().one());
    SymplecticForm two3 = symplectic_form(gf3.field(), gf3.field().element(2));
    auto a = system_for(reference_weyl_multiplier(gf3, one3), one3);
    auto b = system_for(reference_weyl_multiplier(gf3, two3), two3);
    r = std::max(verify(a, b), verify(b, a));
    o.detail << ", GF(3) forms 1<->2 residual " << r;
}

// Fourier inversion between lines and centered operators, and recentering.
void fourier(Outcome &o) {
    double worst = 0.0;
    int systems = 0;
    for (int q : {2, 3, 4, 5}) {
        PhaseSpace space = space_of(q);
        const Field &f = space.field();
        PhaseVector second{f.one(), f.one()};
        int shift = space.index(second);
        std::vector<SymplecticForm> forms = all_forms(f);
        if (q == 5) {
            forms = {symplectic_form(f, f.one())};
        }
        for (SymplecticForm form : forms) {
            auto family = enumerate_weyl_multipliers(space, form);
            for (long long k = 0; k < family.size(); k++) {
                auto w = weyl_system_from_multiplier(family[k], form);
                auto quad = quadratures_from_weyl(w);
                auto centered = centered_weyl_from_quadratures(quad, PhaseVector{}, form);
                auto moved = centered_weyl_from_quadratures(quad, second, form);
                auto expected = recentered(centered, shift);
                double residual = 0.0;
                for (int v = 0; v < space.size(); v++) {
                    residual = std::max(residual, max_abs_diff(centered.op(v), w.op(v)));
                    residual = std::max(residual, max_abs_diff(moved.op(v), expected.op(v)));
                }
                auto rebuilt = quadratures_from_weyl(centered);
                for (int l = 0; l < space.num_lines(); l++) {
                    residual = std::max(residual, max_abs_diff(rebuilt.projection(l), quad.projection(l)));
                }
                o.require(residual <= residual_tol, "inversion for q=" + std::to_string(q));
                worst = std::max(worst, residual);
                systems++;
            }
        }
    }
    o.detail << systems << " systems, worst residual " << worst;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria = {
        {"multiplier census", census},
        {"quadrature axioms", axioms},
        {"classification", classification},
        {"invariance dichotomy", invariance},
        {"Stone-von Neumann intertwiners", stone_von_neumann},
        {"torus structure", torus_structure},
        {"metaplectic torus representation", metaplectic},
        {"qubit example", qubit},
        {"range conjugacy", range_conjugacy},
        {"Fourier round trip", fourier},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception &e) {
            o.passed = false;
            o.detail << "exception: " << e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s: %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.str().c_str(), seconds);
        failures += !o.passed;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
