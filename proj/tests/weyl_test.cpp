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

#include <gtest/gtest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "covmub/error.hpp"
#include "covmub/multiplier.hpp"

using namespace covmub;

namespace {

const std::vector<std::pair<int, int>> small_fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};

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

WeylSystem doubled(const WeylSystem &w) {
    std::vector<ComplexMatrix> ops;
    for (const auto &op : w.ops()) {
        ops.push_back(Eigen::kroneckerProduct(op, ComplexMatrix::Identity(2, 2)).eval());
    }
    return WeylSystem(w.space(), w.form(), ops);
}

}  // namespace

TEST(weyl, clock_shift_operators_are_unitary_and_orthogonal) {
    for (auto [p, r] : small_fields) {
        PhaseSpace space(Field::make(p, r));
        auto w = clock_shift_system(space, unit_form(space));
        int q = space.q();
        EXPECT_LT(max_abs_diff(w.op(0), ComplexMatrix::Identity(q, q)), 1e-12);
        for (int u = 0; u < space.size(); u++) {
            EXPECT_LT(max_abs_diff(w.op(u) * w.op(u).adjoint(), ComplexMatrix::Identity(q, q)), 1e-12);
            for (int v = 0; v < space.size(); v++) {
                Complex inner = (w.op(u).adjoint() * w.op(v)).trace();
                EXPECT_LT(std::abs(inner - Complex(u == v ? q : 0)), 1e-9);
            }
        }
    }
}

TEST(weyl, clock_shift_multiplier_is_the_canonical_table) {
    for (auto [p, r] : small_fields) {
        PhaseSpace space(Field::make(p, r));
        for (Elem s : space.field().elements()) {
            if (s == space.field().zero()) {
                continue;
            }
            SymplecticForm form = symplectic_form(space.field(), s);
            EXPECT_EQ(multiplier_of(clock_shift_system(space, form)), canonical_multiplier(space, form));
        }
    }
}

TEST(weyl, systems_realise_their_multiplier) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        PhaseSpace space(Field::make(p, r));
        SymplecticForm form = unit_form(space);
        auto family = enumerate_weyl_multipliers(space, form);
        for (long long k = 0; k < family.size(); k += 1 + family.size() / 12) {
            auto w = weyl_system_from_multiplier(family[k], form);
            EXPECT_EQ(multiplier_of(w), family[k]);
            EXPECT_TRUE(is_irreducible(w.ops()));
        }
    }
    PhaseSpace space(Field::make(3, 1));
    EXPECT_EQ(kind_of([&] { weyl_system_from_multiplier(canonical_multiplier(space, unit_form(space)), unit_form(space)); }),
              ErrorKind::NotAWeylMultiplier);
}

TEST(weyl, commutator_is_the_symplectic_character) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        PhaseSpace space(Field::make(p, r));
        SymplecticForm form = symplectic_form(space.field(), space.field().element(space.q() - 1));
        auto w = clock_shift_system(space, form);
        auto table = commutation_bicharacter(w);
        for (int u = 0; u < space.size(); u++) {
            for (int v = 0; v < space.size(); v++) {
                EXPECT_EQ(table[static_cast<std::size_t>(u) * space.size() + v], space.bicharacter(form, u, v));
            }
        }
    }
}

TEST(weyl, rephasing_twists_the_multiplier) {
    PhaseSpace space(Field::make(2, 2));
    auto w = clock_shift_system(space, unit_form(space));
    PhaseFunction a{std::vector<std::uint8_t>(16)};
    for (int v = 0; v < 16; v++) {
        a.values[v] = static_cast<std::uint8_t>((v * 7 + 3) % 4);
    }
    EXPECT_EQ(multiplier_of(rephased(w, a)), twist(multiplier_of(w), a));
}

TEST(weyl, recentering_keeps_the_multiplier) {
    PhaseSpace space(Field::make(3, 1));
    auto w = weyl_system_from_multiplier(reference_weyl_multiplier(space, unit_form(space)), unit_form(space));
    for (int s = 0; s < space.size(); s++) {
        EXPECT_EQ(multiplier_of(recentered(w, s)), multiplier_of(w));
    }
}

TEST(weyl, irreducibility) {
    PhaseSpace space(Field::make(3, 1));
    auto w = clock_shift_system(space, unit_form(space));
    EXPECT_TRUE(is_irreducible(w.ops()));
    EXPECT_FALSE(is_irreducible(doubled(w).ops()));
    std::vector<ComplexMatrix> clocks;
    for (int v : space.direction_points(space.q())) {
        clocks.push_back(w.op(v));
    }
    EXPECT_FALSE(is_irreducible(clocks));
}

TEST(weyl, non_projective_operators_are_rejected) {
    PhaseSpace space(Field::make(3, 1));
    auto ops = clock_shift_system(space, unit_form(space)).ops();
    ops[5] = ops[5] * 0.5 + ops[2] * 0.5;
    EXPECT_EQ(kind_of([&] { multiplier_of(space, ops); }), ErrorKind::NotProjective);
    ops.pop_back();
    EXPECT_THROW(multiplier_of(space, ops), Error);
}

TEST(weyl, intertwiner_recovers_a_hidden_unitary) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}}) {
        PhaseSpace space(Field::make(p, r));
        auto w = clock_shift_system(space, unit_form(space));
        for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
            ComplexMatrix v = random_unitary(space.q(), seed);
            std::vector<ComplexMatrix> conjugated;
            for (const auto &op : w.ops()) {
                conjugated.push_back(v * op * v.adjoint());
            }
            WeylSystem target(space, w.form(), conjugated);
            ComplexMatrix u = intertwining_unitary(w, target);
            EXPECT_LT(intertwining_residual(w, target, u), 1e-9);
            EXPECT_LT(max_abs_diff(u * u.adjoint(), ComplexMatrix::Identity(space.q(), space.q())), 1e-9);
            EXPECT_LT(max_abs_diff(u, normalize_global_phase(v)), 1e-8);
        }
    }
}

TEST(weyl, intertwiner_between_equivalent_multipliers) {
    PhaseSpace space(Field::make(2, 2));
    SymplecticForm form = unit_form(space);
    auto family = enumerate_weyl_multipliers(space, form);
    auto w = weyl_system_from_multiplier(family[0], form);
    auto a = intertwiner(family[0], family[37], form);
    auto target = rephased(w, a);
    ASSERT_EQ(multiplier_of(target), family[37]);
    auto other = weyl_system_from_multiplier(family[37], form);
    ComplexMatrix u = intertwining_unitary(target, other);
    EXPECT_LT(intertwining_residual(target, other, u), 1e-9);
}

TEST(weyl, intertwiner_errors) {
    PhaseSpace gf3(Field::make(3, 1));
    PhaseSpace gf2(Field::make(2, 1));
    auto w = clock_shift_system(gf3, unit_form(gf3));
    auto w2 = clock_shift_system(gf2, unit_form(gf2));
    auto twice = clock_shift_system(gf3, symplectic_form(gf3.field(), gf3.field().element(2)));
    EXPECT_EQ(kind_of([&] { intertwining_unitary(w, w2); }), ErrorKind::FieldMismatch);
    EXPECT_EQ(kind_of([&] { intertwining_unitary(w, doubled(w)); }), ErrorKind::InconsistentDimension);
    EXPECT_EQ(kind_of([&] { intertwining_unitary(w, twice); }), ErrorKind::MultiplierMismatch);
    EXPECT_EQ(kind_of([&] { intertwining_unitary(doubled(w), doubled(w)); }), ErrorKind::NotIrreducible);
}

TEST(weyl, global_phase_normalisation) {
    ComplexMatrix u = random_unitary(4, 11);
    ComplexMatrix n = normalize_global_phase(u * std::polar(1.0, 0.7));
    EXPECT_LT(max_abs_diff(n, normalize_global_phase(u)), 1e-12);
    EXPECT_LT(std::abs(n(0, 0).imag()), 1e-12);
    EXPECT_GT(n(0, 0).real(), 0.0);
}
