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

#ifndef COVMUB_PHASE_SPACE_HPP
#define COVMUB_PHASE_SPACE_HPP

#include <memory>
#include <vector>

#include "covmub/finite_field.hpp"

namespace covmub {

/// A point of the plane F^2.
struct PhaseVector {
    Elem x1;
    Elem x2;
    friend auto operator<=>(const PhaseVector &, const PhaseVector &) = default;
};

/// A one-dimensional subspace, represented by (1, a) or (0, 1).
struct Direction {
    int index = 0;
    PhaseVector rep;
};

/// A coset base + D. base is the smallest point of the coset in plane order.
struct AffineLine {
    int index = 0;
    int direction = 0;
    PhaseVector base;
};

/// S(u, v) = scale * (u1 v2 - u2 v1).
struct SymplecticForm {
    Elem scale;
    friend auto operator<=>(const SymplecticForm &, const SymplecticForm &) = default;
};

/// Row-major 2x2 matrix over the field.
struct LinearMap2 {
    Elem a11;
    Elem a12;
    Elem a21;
    Elem a22;
    friend auto operator<=>(const LinearMap2 &, const LinearMap2 &) = default;
};

/// x -> o + A(x - o + shift) for a chosen origin o.
struct AffineMap {
    LinearMap2 linear;
    PhaseVector shift;
};

namespace detail {
struct PhaseSpaceData;
}

/// The plane V = F^2 with its directions and affine lines, all indexed densely.
///
/// Points are indexed by x1 * q + x2 (plane order). Directions are (1, a) for a
/// in field order, then (0, 1). Line index = direction * q + intercept, where the
/// intercept is the coordinate of the line's base point that is not forced to 0.
class PhaseSpace {
   public:
    explicit PhaseSpace(Field field);

    const Field &field() const;
    int q() const;
    /// Number of points, q^2.
    int size() const;

    int index(PhaseVector v) const {
        return v.x1.index * q_ + v.x2.index;
    }
    PhaseVector vector(int index) const;
    PhaseVector vector(int x1, int x2) const;

    int add(int u, int v) const;
    int sub(int u, int v) const;
    int neg(int u) const;
    int scale(Elem a, int u) const;
    PhaseVector add(PhaseVector u, PhaseVector v) const;
    PhaseVector sub(PhaseVector u, PhaseVector v) const;
    PhaseVector scale(Elem a, PhaseVector u) const;

    int num_directions() const {
        return q_ + 1;
    }
    const Direction &direction(int d) const;
    /// Direction spanned by a nonzero vector.
    int direction_of(int v) const;
    /// All points of the direction, ordered as g * rep for g in field order.
    const std::vector<int> &direction_points(int d) const;

    int num_lines() const {
        return q_ * (q_ + 1);
    }
    const AffineLine &line(int l) const;
    int line_through(int direction, int point) const;
    /// Points of the line, ordered as base + g * rep for g in field order.
    std::vector<int> line_points(int l) const;
    int translate_line(int l, int shift) const;

    /// Symplectic pairing S(u, v) as a field element.
    Elem form(SymplecticForm s, int u, int v) const;
    /// Exponent k in Z_p of the bicharacter exp(2 pi i k / p) = exp(2 pi i Tr S(u, v) / p).
    int bicharacter(SymplecticForm s, int u, int v) const;

    /// Dense q^2 x q^2 addition table of point indices (built lazily).
    const std::vector<std::uint16_t> &addition_table() const;

    bool operator==(const PhaseSpace &other) const;

   private:
    std::shared_ptr<const detail::PhaseSpaceData> data_;
    int q_ = 0;
};

/// The directions of F^2 in canonical order.
std::vector<Direction> directions(const PhaseSpace &space);
/// All q(q + 1) lines in canonical order.
std::vector<AffineLine> lines(const PhaseSpace &space);
/// Throws ZeroScale for a zero scale.
SymplecticForm symplectic_form(const Field &field, Elem scale);

LinearMap2 identity_map(const Field &field);
LinearMap2 compose(const Field &field, const LinearMap2 &a, const LinearMap2 &b);
Elem determinant(const Field &field, const LinearMap2 &a);
/// Throws SingularMap.
LinearMap2 inverse(const Field &field, const LinearMap2 &a);
PhaseVector apply(const Field &field, const LinearMap2 &a, PhaseVector v);
int apply(const PhaseSpace &space, const LinearMap2 &a, int v);
int trace(const Field &field, const LinearMap2 &a);
LinearMap2 subtract_identity(const Field &field, const LinearMap2 &a);

/// Image of a point under g, relative to the origin.
PhaseVector affine_action(const PhaseSpace &space, const AffineMap &g, PhaseVector x, PhaseVector origin = {});
/// Image of a line under g; throws SingularMap if the linear part is singular.
int affine_action_on_line(const PhaseSpace &space, const AffineMap &g, int line, PhaseVector origin = {});
/// Group law such that (g1 * g2) . x = g1 . (g2 . x).
AffineMap compose(const Field &field, const AffineMap &g1, const AffineMap &g2);

}  // namespace covmub

#endif
