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

#include "covmub/error.hpp"

namespace covmub {

namespace detail {

struct PhaseSpaceData {
    explicit PhaseSpaceData(Field f) : field(std::move(f)) {
    }
    Field field;
    std::vector<Direction> directions;
    std::vector<std::vector<int>> direction_points;
    std::vector<AffineLine> lines;
    std::vector<std::uint16_t> addition;
};

}  // namespace detail

namespace {
constexpr int max_addition_table_order = 16;
}

PhaseSpace::PhaseSpace(Field field) : q_(field.q()) {
    auto data = std::make_shared<detail::PhaseSpaceData>(field);
    const Field &f = data->field;
    int q = q_;
    for (int d = 0; d <= q; d++) {
        Direction dir;
        dir.index = d;
        dir.rep = d < q ? PhaseVector{f.one(), f.element(d)} : PhaseVector{f.zero(), f.one()};
        data->directions.push_back(dir);
        std::vector<int> pts;
        for (Elem g : f.elements()) {
            pts.push_back(index(PhaseVector{f.mul(g, dir.rep.x1), f.mul(g, dir.rep.x2)}));
        }
        data->direction_points.push_back(std::move(pts));
    }
    for (int d = 0; d <= q; d++) {
        for (int b = 0; b < q; b++) {
            AffineLine line;
            line.index = d * q + b;
            line.direction = d;
            line.base = d < q ? PhaseVector{f.zero(), f.element(b)} : PhaseVector{f.element(b), f.zero()};
            data->lines.push_back(line);
        }
    }
    if (q <= max_addition_table_order) {
        int n = q * q;
        data->addition.resize(static_cast<std::size_t>(n) * n);
        const std::uint16_t *add = f.add_table();
        for (int u = 0; u < n; u++) {
            for (int v = 0; v < n; v++) {
                int s1 = add[(u / q) * q + v / q];
                int s2 = add[(u % q) * q + v % q];
                data->addition[static_cast<std::size_t>(u) * n + v] = static_cast<std::uint16_t>(s1 * q + s2);
            }
        }
    }
    data_ = std::move(data);
}

const Field &PhaseSpace::field() const {
    return data_->field;
}
int PhaseSpace::q() const {
    return q_;
}
int PhaseSpace::size() const {
    return q_ * q_;
}

PhaseVector PhaseSpace::vector(int index) const {
    return PhaseVector{Elem{static_cast<std::uint16_t>(index / q_)}, Elem{static_cast<std::uint16_t>(index % q_)}};
}

PhaseVector PhaseSpace::vector(int x1, int x2) const {
    return PhaseVector{field().element(x1), field().element(x2)};
}

int PhaseSpace::add(int u, int v) const {
    return index(add(vector(u), vector(v)));
}
int PhaseSpace::sub(int u, int v) const {
    return index(sub(vector(u), vector(v)));
}
int PhaseSpace::neg(int u) const {
    PhaseVector a = vector(u);
    return index(PhaseVector{field().neg(a.x1), field().neg(a.x2)});
}
int PhaseSpace::scale(Elem a, int u) const {
    return index(scale(a, vector(u)));
}

PhaseVector PhaseSpace::add(PhaseVector u, PhaseVector v) const {
    return PhaseVector{field().add(u.x1, v.x1), field().add(u.x2, v.x2)};
}
PhaseVector PhaseSpace::sub(PhaseVector u, PhaseVector v) const {
    return PhaseVector{field().sub(u.x1, v.x1), field().sub(u.x2, v.x2)};
}
PhaseVector PhaseSpace::scale(Elem a, PhaseVector u) const {
    return PhaseVector{field().mul(a, u.x1), field().mul(a, u.x2)};
}

const Direction &PhaseSpace::direction(int d) const {
    return data_->directions.at(d);
}

int PhaseSpace::direction_of(int v) const {
    PhaseVector a = vector(v);
    if (a.x1 != field().zero()) {
        return field().div(a.x2, a.x1).index;
    }
    if (a.x2 == field().zero()) {
        throw Error(ErrorKind::InvalidInput, "the zero vector spans no direction");
    }
    return q_;
}

const std::vector<int> &PhaseSpace::direction_points(int d) const {
    return data_->direction_points.at(d);
}

const AffineLine &PhaseSpace::line(int l) const {
    return data_->lines.at(l);
}

int PhaseSpace::line_through(int direction, int point) const {
    PhaseVector x = vector(point);
    if (direction == q_) {
        return direction * q_ + x.x1.index;
    }
    Elem slope = field().element(direction);
    Elem intercept = field().sub(x.x2, field().mul(slope, x.x1));
    return direction * q_ + intercept.index;
}

std::vector<int> PhaseSpace::line_points(int l) const {
    const AffineLine &line = this->line(l);
    int base = index(line.base);
    std::vector<int> out;
    for (int d : direction_points(line.direction)) {
        out.push_back(add(base, d));
    }
    return out;
}

int PhaseSpace::translate_line(int l, int shift) const {
    const AffineLine &line = this->line(l);
    return line_through(line.direction, add(index(line.base), shift));
}

Elem PhaseSpace::form(SymplecticForm s, int u, int v) const {
    const Field &f = field();
    PhaseVector a = vector(u);
    PhaseVector b = vector(v);
    return f.mul(s.scale, f.sub(f.mul(a.x1, b.x2), f.mul(a.x2, b.x1)));
}

int PhaseSpace::bicharacter(SymplecticForm s, int u, int v) const {
    return field().trace(form(s, u, v));
}

const std::vector<std::uint16_t> &PhaseSpace::addition_table() const {
    if (data_->addition.empty()) {
        throw Error(ErrorKind::FieldTooLarge, "addition table is only built for q <= 16");
    }
    return data_->addition;
}

bool PhaseSpace::operator==(const PhaseSpace &other) const {
    return data_ == other.data_ || field() == other.field();
}

std::vector<Direction> directions(const PhaseSpace &space) {
    std::vector<Direction> out;
    for (int d = 0; d < space.num_directions(); d++) {
        out.push_back(space.direction(d));
    }
    return out;
}

std::vector<AffineLine> lines(const PhaseSpace &space) {
    std::vector<AffineLine> out;
    for (int l = 0; l < space.num_lines(); l++) {
        out.push_back(space.line(l));
    }
    return out;
}

SymplecticForm symplectic_form(const Field &field, Elem scale) {
    if (scale == field.zero()) {
        throw Error(ErrorKind::ZeroScale, "a symplectic form needs a nonzero scale");
    }
    if (scale.index >= field.q()) {
        throw Error(ErrorKind::InvalidInput, "scale outside " + field.name());
    }
    return SymplecticForm{scale};
}

LinearMap2 identity_map(const Field &field) {
    return LinearMap2{field.one(), field.zero(), field.zero(), field.one()};
}

LinearMap2 compose(const Field &f, const LinearMap2 &a, const LinearMap2 &b) {
    return LinearMap2{
        f.add(f.mul(a.a11, b.a11), f.mul(a.a12, b.a21)),
        f.add(f.mul(a.a11, b.a12), f.mul(a.a12, b.a22)),
        f.add(f.mul(a.a21, b.a11), f.mul(a.a22, b.a21)),
        f.add(f.mul(a.a21, b.a12), f.mul(a.a22, b.a22)),
    };
}

Elem determinant(const Field &f, const LinearMap2 &a) {
    return f.sub(f.mul(a.a11, a.a22), f.mul(a.a12, a.a21));
}

LinearMap2 inverse(const Field &f, const LinearMap2 &a) {
    Elem det = determinant(f, a);
    if (det == f.zero()) {
        throw Error(ErrorKind::SingularMap, "matrix is singular");
    }
    Elem inv = f.inv(det);
    return LinearMap2{f.mul(inv, a.a22), f.neg(f.mul(inv, a.a12)), f.neg(f.mul(inv, a.a21)), f.mul(inv, a.a11)};
}

PhaseVector apply(const Field &f, const LinearMap2 &a, PhaseVector v) {
    return PhaseVector{f.add(f.mul(a.a11, v.x1), f.mul(a.a12, v.x2)), f.add(f.mul(a.a21, v.x1), f.mul(a.a22, v.x2))};
}

int apply(const PhaseSpace &space, const LinearMap2 &a, int v) {
    return space.index(apply(space.field(), a, space.vector(v)));
}

int trace(const Field &f, const LinearMap2 &a) {
    return f.add(a.a11, a.a22).index;
}

LinearMap2 subtract_identity(const Field &f, const LinearMap2 &a) {
    return LinearMap2{f.sub(a.a11, f.one()), a.a12, a.a21, f.sub(a.a22, f.one())};
}

PhaseVector affine_action(const PhaseSpace &space, const AffineMap &g, PhaseVector x, PhaseVector origin) {
    PhaseVector rel = space.add(space.sub(x, origin), g.shift);
    return space.add(origin, apply(space.field(), g.linear, rel));
}

int affine_action_on_line(const PhaseSpace &space, const AffineMap &g, int line, PhaseVector origin) {
    if (determinant(space.field(), g.linear) == space.field().zero()) {
        throw Error(ErrorKind::SingularMap, "affine map with singular linear part");
    }
    const AffineLine &l = space.line(line);
    PhaseVector image = affine_action(space, g, l.base, origin);
    int dir = space.direction_of(apply(space, g.linear, space.index(space.direction(l.direction).rep)));
    return space.line_through(dir, space.index(image));
}

AffineMap compose(const Field &field, const AffineMap &g1, const AffineMap &g2) {
    PhaseVector pulled = apply(field, inverse(field, g2.linear), g1.shift);
    return AffineMap{compose(field, g1.linear, g2.linear),
                     PhaseVector{field.add(g2.shift.x1, pulled.x1), field.add(g2.shift.x2, pulled.x2)}};
}

}  // namespace covmub
