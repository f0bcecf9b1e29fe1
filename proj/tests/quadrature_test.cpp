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

#include <gtest/gtest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "covmub/error.hpp"
#include "covmub/multiplier.hpp"

using namespace covmub;

namespace {

SymplecticForm unit_form(const PhaseSpace &space) {
    return symplectic_form(space.field(), space.field().one());
}

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::InvalidInput;
}

QuadratureSystem conjugated(const QuadratureSystem &system, const ComplexMatrix &u) {
    std::vector<ComplexMatrix> out;
    for (const auto &p : system.projections()) {
        out.push_back(u * p * u.adjoint());
    }
    return QuadratureSystem(system.space(), out);
}

}  // namespace

TEST(quadrature, systems_from_weyl_satisfy_the_axioms) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
        PhaseSpace space(Field::make(p, r));
        SymplecticForm form = unit_form(space);
        auto w = weyl_system_from_multiplier(reference_weyl_multiplier(space, form), form);
        auto report = verify_quadrature_axioms(quadratures_from_weyl(w));
        EXPECT_TRUE(report.ok());
        EXPECT_EQ(report.span_rank, space.q() * space.q());
        EXPECT_LT(report.worst_residual(), 1e-9);
        EXPECT_EQ(report.witness_line, -1);
    }
}

TEST(quadrature, every_family_member_gives_quadratures) {
    PhaseSpace space(Field::make(2, 2));
    SymplecticForm form = unit_form(space);
    auto family = enumerate_weyl_multipliers(space, form);
    for (long long k = 0; k < family.size(); k++) {
        auto quad = quadratures_from_weyl(weyl_system_from_multiplier(family[k], form));
        EXPECT_TRUE(verify_quadrature_axioms(quad).ok());
        EXPECT_EQ(associated_multiplier(quad), family[k]);
    }
}

TEST(quadrature, scaled_identity_is_caught_with_a_witness) {
    PhaseSpace space(Field::make(3, 1));
    SymplecticForm form = unit_form(space);
    auto quad = quadratures_from_weyl(weyl_system_from_multiplier(reference_weyl_multiplier(space, form), form));
    auto projections = quad.projections();
    projections[5] = ComplexMatrix::Identity(3, 3) / 3.0;
    auto report = verify_quadrature_axioms(QuadratureSystem(space, projections));
    EXPECT_FALSE(report.projections_ok);
    EXPECT_EQ(report.witness_line, 5);
    EXPECT_EQ(report.witness_rank, 3);
    EXPECT_FALSE(report.resolution_ok);
    EXPECT_EQ(report.witness_direction, 1);
}

TEST(quadrature, swapped_lines_break_resolution_and_unbiasedness) {
    PhaseSpace space(Field::make(3, 1));
    SymplecticForm form = unit_form(space);
    auto quad = quadratures_from_weyl(weyl_system_from_multiplier(reference_weyl_multiplier(space, form), form));
    auto projections = quad.projections();
    projections[1] = projections[0];
    auto report = verify_quadrature_axioms(QuadratureSystem(space, projections));
    EXPECT_TRUE(report.projections_ok);
    EXPECT_FALSE(report.resolution_ok);
    EXPECT_EQ(report.witness_direction, 0);
    EXPECT_TRUE(report.unbiased_ok);
}

TEST(quadrature, fourier_round_trip) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        PhaseSpace space(Field::make(p, r));
        SymplecticForm form = unit_form(space);
        auto w = weyl_system_from_multiplier(reference_weyl_multiplier(space, form), form);
        auto quad = quadratures_from_weyl(w);
        auto back = centered_weyl_from_quadratures(quad, PhaseVector{}, form);
        for (int v = 0; v < space.size(); v++) {
            EXPECT_LT(max_abs_diff(back.op(v), w.op(v)), 1e-9);
        }
        EXPECT_TRUE(translation_covariance_check(quad, w));
        EXPECT_TRUE(is_centered(quad, w, PhaseVector{}));
    }
}

TEST(quadrature, recentering_moves_the_origin) {
    PhaseSpace space(Field::make(3, 1));
    SymplecticForm form = unit_form(space);
    auto w = weyl_system_from_multiplier(reference_weyl_multiplier(space, form), form);
    for (int o = 0; o < space.size(); o++) {
        PhaseVector origin = space.vector(o);
        auto quad = quadratures_from_weyl(w, origin);
        EXPECT_TRUE(verify_quadrature_axioms(quad).ok());
        EXPECT_TRUE(is_centered(quad, w, origin));
        EXPECT_EQ(is_centered(quad, w, PhaseVector{}), o == 0);
        auto back = centered_weyl_from_quadratures(quad, origin, form);
        for (int v = 0; v < space.size(); v++) {
            EXPECT_LT(max_abs_diff(back.op(v), w.op(v)), 1e-9);
        }
    }
}

TEST(quadrature, induced_form_is_recovered) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}}) {
        PhaseSpace space(Field::make(p, r));
        for (int s = 1; s < space.q(); s++) {
            SymplecticForm form = symplectic_form(space.field(), space.field().element(s));
            auto quad =
                quadratures_from_weyl(weyl_system_from_multiplier(reference_weyl_multiplier(space, form), form));
            EXPECT_EQ(induced_symplectic_form(quad), form);
            EXPECT_EQ(kind_of([&] {
                          centered_weyl_from_quadratures(
                              quad, PhaseVector{},
                              symplectic_form(space.field(), space.field().element(s % (space.q() - 1) + 1)));
                      }),
                      space.q() == 2 ? ErrorKind::InvalidInput : ErrorKind::NotCovariant);
        }
    }
}

TEST(quadrature, unitary_images_are_equivalent) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        PhaseSpace space(Field::make(p, r));
        SymplecticForm form = unit_form(space);
        auto quad = quadratures_from_weyl(weyl_system_from_multiplier(reference_weyl_multiplier(space, form), form));
        ComplexMatrix v = random_unitary(space.q(), 5);
        auto image = conjugated(quad, v);
        auto eq = are_equivalent(quad, image);
        ASSERT_TRUE(eq.equivalent);
        EXPECT_LT(eq.residual, 1e-9);
        EXPECT_LT(max_abs_diff(*eq.unitary, normalize_global_phase(v)), 1e-8);
    }
}

TEST(quadrature, different_multipliers_are_not_equivalent) {
    PhaseSpace space(Field::make(2, 1));
    SymplecticForm form = unit_form(space);
    auto family = enumerate_weyl_multipliers(space, form);
    auto a = quadratures_from_weyl(weyl_system_from_multiplier(family[0], form));
    auto b = quadratures_from_weyl(weyl_system_from_multiplier(family[1], form));
    EXPECT_FALSE(are_equivalent(a, b).equivalent);
    EXPECT_FALSE(are_equivalent(a, b).unitary.has_value());
}

TEST(quadrature, affine_transforms_keep_the_axioms) {
    PhaseSpace space(Field::make(3, 1));
    const Field &f = space.field();
    SymplecticForm form = unit_form(space);
    auto quad = quadratures_from_weyl(weyl_system_from_multiplier(reference_weyl_multiplier(space, form), form));
    AffineMap id{identity_map(f), PhaseVector{}};
    auto same = transform_quadratures(quad, id);
    for (int l = 0; l < space.num_lines(); l++) {
        EXPECT_LT(max_abs_diff(same.projection(l), quad.projection(l)), 1e-15);
    }
    AffineMap g{LinearMap2{f.one(), f.one(), f.zero(), f.element(2)}, space.vector(1, 2)};
    auto moved = transform_quadratures(quad, g);
    EXPECT_TRUE(verify_quadrature_axioms(moved).ok());
    // det = 2 scales the induced form.
    EXPECT_EQ(induced_symplectic_form(moved).scale, f.element(2));
}

TEST(quadrature, relabeling_relates_every_pair_of_multipliers) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        PhaseSpace space(Field::make(p, r));
        SymplecticForm form = unit_form(space);
        auto family = enumerate_weyl_multipliers(space, form);
        auto first = quadratures_from_weyl(weyl_system_from_multiplier(family[0], form));
        for (long long k = 0; k < family.size(); k += 1 + family.size() / 6) {
            auto second = quadratures_from_weyl(weyl_system_from_multiplier(family[k], form));
            auto witness = relabeling_witness(first, second);
            EXPECT_LT(witness.residual, 1e-9);
            ASSERT_EQ(static_cast<int>(witness.shifts.size()), space.num_directions());
            for (int l = 0; l < space.num_lines(); l++) {
                int source = space.translate_line(l, witness.shifts[space.line(l).direction]);
                EXPECT_LT(max_abs_diff(second.projection(l),
                                       witness.unitary * first.projection(source) * witness.unitary.adjoint()),
                          1e-9);
            }
        }
    }
}

TEST(quadrature, range_conjugacy_across_forms) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}}) {
        PhaseSpace space(Field::make(p, r));
        const Field &f = space.field();
        SymplecticForm one = unit_form(space);
        SymplecticForm other = symplectic_form(f, f.element(space.q() - 1));
        auto first = quadratures_from_weyl(weyl_system_from_multiplier(reference_weyl_multiplier(space, one), one));
        auto second =
            quadratures_from_weyl(weyl_system_from_multiplier(reference_weyl_multiplier(space, other), other));
        auto witness = range_conjugacy_witness(first, second);
        EXPECT_LT(witness.residual, 1e-9);
        EXPECT_EQ(determinant(f, witness.map), f.div(other.scale, one.scale));
    }
}

TEST(quadrature, construction_errors) {
    PhaseSpace space(Field::make(3, 1));
    auto w = clock_shift_system(space, unit_form(space));
    auto quad = quadratures_from_weyl(w);
    auto projections = quad.projections();
    projections.pop_back();
    EXPECT_EQ(kind_of([&] { QuadratureSystem(space, projections); }), ErrorKind::InconsistentDimension);
    std::vector<ComplexMatrix> doubled;
    for (const auto &op : w.ops()) {
        doubled.push_back(Eigen::kroneckerProduct(op, ComplexMatrix::Identity(2, 2)).eval());
    }
    EXPECT_EQ(kind_of([&] { quadratures_from_weyl(WeylSystem(space, w.form(), doubled)); }),
              ErrorKind::NotIrreducible);
    PhaseSpace other(Field::make(2, 2));
    auto quad4 = quadratures_from_weyl(clock_shift_system(other, unit_form(other)));
    EXPECT_EQ(kind_of([&] { are_equivalent(quad, quad4); }), ErrorKind::FieldMismatch);
}
