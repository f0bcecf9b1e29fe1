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

#include "covmub/phase_space.hpp"

#include <gtest/gtest.h>

#include <set>

#include "covmub/error.hpp"

using namespace covmub;

namespace {

const std::vector<std::pair<int, int>> small_fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}};

// All 2x2 maps, for q small enough to enumerate q^4 of them.
std::vector<LinearMap2> all_maps(const Field &f) {
    std::vector<LinearMap2> out;
    for (Elem a : f.elements()) {
        for (Elem b : f.elements()) {
            for (Elem c : f.elements()) {
                for (Elem d : f.elements()) {
                    out.push_back(LinearMap2{a, b, c, d});
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST(phase_space, counts) {
    for (auto [p, r] : small_fields) {
        PhaseSpace space(Field::make(p, r));
        int q = space.q();
        EXPECT_EQ(space.size(), q * q);
        EXPECT_EQ(static_cast<int>(directions(space).size()), q + 1);
        EXPECT_EQ(static_cast<int>(lines(space).size()), q * (q + 1));
        for (int d = 0; d < space.num_directions(); d++) {
            EXPECT_EQ(static_cast<int>(space.direction_points(d).size()), q);
        }
    }
}

TEST(phase_space, direction_representatives) {
    PhaseSpace space(Field::make(3, 1));
    EXPECT_EQ(space.direction(0).rep, space.vector(1, 0));
    EXPECT_EQ(space.direction(2).rep, space.vector(1, 2));
    EXPECT_EQ(space.direction(3).rep, space.vector(0, 1));
}

TEST(phase_space, directions_partition_nonzero_points) {
    for (auto [p, r] : small_fields) {
        PhaseSpace space(Field::make(p, r));
        std::vector<int> hits(space.size(), 0);
        for (int d = 0; d < space.num_directions(); d++) {
            for (int v : space.direction_points(d)) {
                hits[v]++;
                if (v != 0) {
                    EXPECT_EQ(space.direction_of(v), d);
                }
            }
        }
        EXPECT_EQ(hits[0], space.q() + 1);
        for (int v = 1; v < space.size(); v++) {
            EXPECT_EQ(hits[v], 1);
        }
    }
}

TEST(phase_space, parallel_lines_partition_the_plane) {
    for (auto [p, r] : small_fields) {
        PhaseSpace space(Field::make(p, r));
        for (int d = 0; d < space.num_directions(); d++) {
            std::vector<int> hits(space.size(), 0);
            for (int l = d * space.q(); l < (d + 1) * space.q(); l++) {
                EXPECT_EQ(space.line(l).direction, d);
                for (int x : space.line_points(l)) {
                    hits[x]++;
                    EXPECT_EQ(space.line_through(d, x), l);
                }
            }
            for (int h : hits) {
                EXPECT_EQ(h, 1);
            }
        }
    }
}

TEST(phase_space, nonparallel_lines_meet_once) {
    for (auto [p, r] : small_fields) {
        PhaseSpace space(Field::make(p, r));
        auto all = lines(space);
        for (const auto &a : all) {
            auto pa = space.line_points(a.index);
            std::set<int> sa(pa.begin(), pa.end());
            for (const auto &b : all) {
                if (a.direction == b.direction) {
                    continue;
                }
                int common = 0;
                for (int x : space.line_points(b.index)) {
                    common += static_cast<int>(sa.count(x));
                }
                EXPECT_EQ(common, 1);
            }
        }
    }
}

TEST(phase_space, line_bases_are_minimal) {
    for (auto [p, r] : small_fields) {
        PhaseSpace space(Field::make(p, r));
        for (const auto &l : lines(space)) {
            auto pts = space.line_points(l.index);
            int smallest = *std::min_element(pts.begin(), pts.end());
            EXPECT_EQ(space.index(l.base), smallest);
        }
    }
}

TEST(phase_space, translation_moves_lines_within_their_class) {
    PhaseSpace space(Field::make(2, 2));
    for (const auto &l : lines(space)) {
        for (int t = 0; t < space.size(); t++) {
            int moved = space.translate_line(l.index, t);
            EXPECT_EQ(space.line(moved).direction, l.direction);
            std::set<int> expect;
            for (int x : space.line_points(l.index)) {
                expect.insert(space.add(x, t));
            }
            auto got = space.line_points(moved);
            EXPECT_EQ(std::set<int>(got.begin(), got.end()), expect);
        }
    }
}

TEST(phase_space, form_is_alternating_and_nondegenerate) {
    for (auto [p, r] : small_fields) {
        Field f = Field::make(p, r);
        PhaseSpace space(f);
        for (Elem s : f.elements()) {
            if (s == f.zero()) {
                continue;
            }
            SymplecticForm form = symplectic_form(f, s);
            for (int u = 0; u < space.size(); u++) {
                EXPECT_EQ(space.form(form, u, u), f.zero());
                bool degenerate = true;
                for (int v = 0; v < space.size(); v++) {
                    EXPECT_EQ(space.form(form, u, v), f.neg(space.form(form, v, u)));
                    degenerate = degenerate && space.bicharacter(form, u, v) == 0;
                }
                EXPECT_EQ(degenerate, u == 0);
            }
        }
        EXPECT_THROW(symplectic_form(f, f.zero()), Error);
    }
}

TEST(phase_space, bicharacter_is_additive) {
    Field f = Field::make(3, 2);
    PhaseSpace space(f);
    SymplecticForm form = symplectic_form(f, f.element(4));
    for (int u = 0; u < space.size(); u++) {
        for (int v = 0; v < space.size(); v++) {
            for (int w = 0; w < space.size(); w += 7) {
                int lhs = space.bicharacter(form, space.add(u, v), w);
                int rhs = (space.bicharacter(form, u, w) + space.bicharacter(form, v, w)) % 3;
                EXPECT_EQ(lhs, rhs);
            }
        }
    }
}

TEST(phase_space, maps_scale_the_form_by_determinant) {
    Field f = Field::make(3, 1);
    PhaseSpace space(f);
    SymplecticForm form = symplectic_form(f, f.one());
    for (const auto &a : all_maps(f)) {
        Elem det = determinant(f, a);
        for (int u = 0; u < space.size(); u++) {
            for (int v = 0; v < space.size(); v++) {
                Elem lhs = space.form(form, apply(space, a, u), apply(space, a, v));
                EXPECT_EQ(lhs, f.mul(det, space.form(form, u, v)));
            }
        }
    }
}

TEST(phase_space, inverse_and_composition) {
    Field f = Field::make(2, 2);
    PhaseSpace space(f);
    for (const auto &a : all_maps(f)) {
        if (determinant(f, a) == f.zero()) {
            EXPECT_THROW(inverse(f, a), Error);
            continue;
        }
        LinearMap2 ai = inverse(f, a);
        EXPECT_EQ(compose(f, a, ai), identity_map(f));
        EXPECT_EQ(compose(f, ai, a), identity_map(f));
        LinearMap2 b{f.one(), f.element(2), f.zero(), f.one()};
        for (int v = 0; v < space.size(); v++) {
            EXPECT_EQ(apply(space, compose(f, a, b), v), apply(space, a, apply(space, b, v)));
        }
    }
}

TEST(phase_space, affine_action_is_a_left_action) {
    Field f = Field::make(3, 1);
    PhaseSpace space(f);
    std::vector<LinearMap2> sample = {
        identity_map(f),
        LinearMap2{f.one(), f.one(), f.zero(), f.one()},
        LinearMap2{f.zero(), f.element(2), f.one(), f.zero()},
        LinearMap2{f.element(2), f.one(), f.one(), f.one()},
    };
    PhaseVector origin = space.vector(1, 2);
    for (const auto &a1 : sample) {
        for (const auto &a2 : sample) {
            for (int s1 = 0; s1 < space.size(); s1 += 2) {
                for (int s2 = 0; s2 < space.size(); s2 += 3) {
                    AffineMap g1{a1, space.vector(s1)};
                    AffineMap g2{a2, space.vector(s2)};
                    AffineMap g12 = compose(f, g1, g2);
                    for (int x = 0; x < space.size(); x++) {
                        PhaseVector px = space.vector(x);
                        PhaseVector lhs = affine_action(space, g12, px, origin);
                        PhaseVector rhs = affine_action(space, g1, affine_action(space, g2, px, origin), origin);
                        EXPECT_EQ(lhs, rhs);
                    }
                }
            }
        }
    }
}

TEST(phase_space, affine_action_on_lines_matches_points) {
    Field f = Field::make(2, 2);
    PhaseSpace space(f);
    AffineMap g{LinearMap2{f.element(2), f.one(), f.one(), f.one()}, space.vector(3, 1)};
    for (const auto &l : lines(space)) {
        int image = affine_action_on_line(space, g, l.index);
        std::set<int> expect;
        for (int x : space.line_points(l.index)) {
            expect.insert(space.index(affine_action(space, g, space.vector(x))));
        }
        auto got = space.line_points(image);
        EXPECT_EQ(std::set<int>(got.begin(), got.end()), expect);
    }
}
