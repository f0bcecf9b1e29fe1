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

#include "covmub/symplectic.hpp"

#include <algorithm>
#include <map>
#include <numbers>

#include "covmub/error.hpp"

namespace covmub {

namespace {

constexpr int max_sl_order = 9;
constexpr int max_probe_order = 4;

int map_key(const Field &f, const LinearMap2 &a) {
    int q = f.q();
    return ((a.a11.index * q + a.a12.index) * q + a.a21.index) * q + a.a22.index;
}

ComplexMatrix matrix_power(const ComplexMatrix &m, int e) {
    ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < e; i++) {
        out = out * m;
    }
    return out;
}

// W_A(v) = W(A v).
WeylSystem pulled_system(const WeylSystem &system, const LinearMap2 &map) {
    const PhaseSpace &space = system.space();
    std::vector<ComplexMatrix> ops;
    ops.reserve(space.size());
    for (int v = 0; v < space.size(); v++) {
        ops.push_back(system.op(apply(space, map, v)));
    }
    return WeylSystem(space, system.form(), std::move(ops));
}

}  // namespace

std::vector<LinearMap2> sl_enumerate(const Field &field) {
    if (field.q() > max_sl_order) {
        throw Error(ErrorKind::FieldTooLarge, "SL(2) enumeration is limited to q <= 9");
    }
    std::vector<LinearMap2> out;
    for (Elem a : field.elements()) {
        for (Elem b : field.elements()) {
            for (Elem c : field.elements()) {
                for (Elem d : field.elements()) {
                    LinearMap2 m{a, b, c, d};
                    if (determinant(field, m) == field.one()) {
                        out.push_back(m);
                    }
                }
            }
        }
    }
    return out;
}

bool is_nonsplit(const Field &field, const LinearMap2 &map) {
    if (determinant(field, map) != field.one()) {
        throw Error(ErrorKind::NotUnimodular, "nonsplit test needs determinant 1");
    }
    Elem tr = field.add(map.a11, map.a22);
    for (Elem x : field.elements()) {
        if (field.add(field.sub(field.mul(x, x), field.mul(tr, x)), field.one()) == field.zero()) {
            return false;
        }
    }
    return true;
}

bool fixes_some_direction(const PhaseSpace &space, const LinearMap2 &map) {
    for (int d = 0; d < space.num_directions(); d++) {
        int image = apply(space, map, space.index(space.direction(d).rep));
        if (image != 0 && space.direction_of(image) == d) {
            return true;
        }
    }
    return false;
}

Torus maximal_nonsplit_torus(const Field &field) {
    QuadraticExtension ext(field);
    ExtElem z = ext.norm_one_generator();
    ExtElem sum = ext.add(z, ext.conj(z));
    Torus torus;
    torus.generator = LinearMap2{sum.c0, field.one(), field.neg(field.one()), field.zero()};
    LinearMap2 power = identity_map(field);
    for (int k = 0; k <= field.q(); k++) {
        torus.elements.push_back(power);
        power = compose(field, power, torus.generator);
    }
    validate_torus(field, torus.elements);
    return torus;
}

void validate_torus(const Field &field, const std::vector<LinearMap2> &elements) {
    if (static_cast<int>(elements.size()) != field.q() + 1) {
        throw Error(ErrorKind::NotATorus, "a maximal nonsplit torus has q + 1 elements");
    }
    std::map<int, int> present;
    for (std::size_t i = 0; i < elements.size(); i++) {
        if (determinant(field, elements[i]) != field.one()) {
            throw Error(ErrorKind::NotATorus, "torus element with determinant != 1");
        }
        present[map_key(field, elements[i])] = static_cast<int>(i);
    }
    LinearMap2 id = identity_map(field);
    LinearMap2 minus_id{field.neg(field.one()), field.zero(), field.zero(), field.neg(field.one())};
    if (!present.count(map_key(field, id)) || present.size() != elements.size()) {
        throw Error(ErrorKind::NotATorus, "torus must contain the identity and have distinct elements");
    }
    bool cyclic = false;
    for (const auto &a : elements) {
        for (const auto &b : elements) {
            if (!present.count(map_key(field, compose(field, a, b)))) {
                throw Error(ErrorKind::NotATorus, "torus is not closed under composition");
            }
        }
        if (a != id && a != minus_id && !is_nonsplit(field, a)) {
            throw Error(ErrorKind::NotATorus, "torus contains a split element other than +-I");
        }
        LinearMap2 power = a;
        int order = 1;
        while (power != id) {
            power = compose(field, power, a);
            order++;
        }
        cyclic = cyclic || order == field.q() + 1;
    }
    if (!cyclic) {
        throw Error(ErrorKind::NotATorus, "torus is not cyclic");
    }
}

std::vector<std::vector<int>> orbits_on_directions(const PhaseSpace &space, const std::vector<LinearMap2> &group) {
    std::vector<int> orbit_of(space.num_directions(), -1);
    std::vector<std::vector<int>> out;
    for (int d = 0; d < space.num_directions(); d++) {
        if (orbit_of[d] >= 0) {
            continue;
        }
        std::vector<int> orbit;
        for (const auto &a : group) {
            int image = space.direction_of(apply(space, a, space.index(space.direction(d).rep)));
            if (orbit_of[image] < 0) {
                orbit_of[image] = static_cast<int>(out.size());
                orbit.push_back(image);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

double metaplectic_residual(const WeylSystem &system, const LinearMap2 &map, const ComplexMatrix &op) {
    const PhaseSpace &space = system.space();
    double worst = 0.0;
    ComplexMatrix adj = op.adjoint();
    for (int v = 0; v < space.size(); v++) {
        worst = std::max(worst, max_abs_diff(system.op(apply(space, map, v)), op * system.op(v) * adj));
    }
    return worst;
}

ComplexMatrix metaplectic_operator(const WeylSystem &system, const LinearMap2 &map, Complex scale, Tolerance tol) {
    const PhaseSpace &space = system.space();
    const Field &f = space.field();
    MultiplierTable table = multiplier_of(system, tol);
    if (!(pullback(table, map) == table)) {
        throw Error(ErrorKind::NotInvariantMultiplier, "multiplier is not invariant under the map");
    }
    LinearMap2 shifted = subtract_identity(f, map);
    if (determinant(f, shifted) == f.zero()) {
        throw Error(ErrorKind::SingularAminusI, "A - I is singular");
    }
    LinearMap2 resolvent = inverse(f, shifted);
    ComplexMatrix acc = ComplexMatrix::Zero(system.dim(), system.dim());
    for (int u = 0; u < space.size(); u++) {
        acc += table.value(u, apply(space, resolvent, u)) * system.op(u);
    }
    ComplexMatrix op = acc * (scale / static_cast<double>(space.q()));
    double unitarity = max_abs_diff(op * op.adjoint(), ComplexMatrix::Identity(op.rows(), op.cols()));
    double residual = metaplectic_residual(system, map, op);
    if (unitarity > tol.identity || residual > tol.identity) {
        throw Error(ErrorKind::NotCovariant, "metaplectic operator fails by " +
                                                 std::to_string(std::max(unitarity, residual)));
    }
    return op;
}

TorusRepresentation ordinary_phase_fix(const Torus &torus, const ComplexMatrix &generator_op, Tolerance tol) {
    int n = static_cast<int>(torus.elements.size());
    ComplexMatrix power = matrix_power(generator_op, n);
    long long dim = generator_op.rows();
    Complex zeta = power.trace() / static_cast<double>(dim);
    if (max_abs_diff(power, zeta * ComplexMatrix::Identity(dim, dim)) > tol.identity ||
        std::abs(std::abs(zeta) - 1.0) > tol.identity) {
        throw Error(ErrorKind::NotScalarPower, "U^n is not a unimodular scalar");
    }
    double angle = std::arg(std::conj(zeta));
    if (angle < 0) {
        angle += 2 * std::numbers::pi;
    }
    Complex scale = std::polar(1.0, angle / n);
    TorusRepresentation rep;
    rep.scale = scale;
    rep.power_scalar = zeta;
    ComplexMatrix fixed = scale * generator_op;
    ComplexMatrix acc = ComplexMatrix::Identity(dim, dim);
    for (int k = 0; k < n; k++) {
        rep.ops.push_back(acc);
        acc = acc * fixed;
    }
    return rep;
}

TorusRepresentation metaplectic_torus_representation(const WeylSystem &system, const Torus &torus, Tolerance tol) {
    return ordinary_phase_fix(torus, metaplectic_operator(system, torus.generator, 1.0, tol), tol);
}

double covariance_residual(const QuadratureSystem &system, const std::vector<LinearMap2> &group,
                           const std::vector<ComplexMatrix> &ops) {
    const PhaseSpace &space = system.space();
    if (group.size() != ops.size()) {
        throw Error(ErrorKind::InconsistentDimension, "one unitary per group element is required");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < group.size(); i++) {
        ComplexMatrix adj = ops[i].adjoint();
        for (int l = 0; l < space.num_lines(); l++) {
            int image = affine_action_on_line(space, AffineMap{group[i], PhaseVector{}}, l);
            worst = std::max(worst, max_abs_diff(system.projection(image), ops[i] * system.projection(l) * adj));
        }
    }
    return worst;
}

bool covariant_quadrature_check(const QuadratureSystem &system, const std::vector<LinearMap2> &group,
                                const std::vector<ComplexMatrix> &ops, Tolerance tol) {
    return covariance_residual(system, group, ops) <= tol.identity;
}

SlProbe sl_extension_probe(const WeylSystem &system, Tolerance tol) {
    const PhaseSpace &space = system.space();
    const Field &f = space.field();
    if (f.q() > max_probe_order) {
        throw Error(ErrorKind::FieldTooLarge, "the SL(2) probe is limited to q <= 4");
    }
    int modulus = phase_modulus(f);
    int n = space.size();
    MultiplierTable table = multiplier_of(system, tol);
    SlProbe probe;
    probe.group = sl_enumerate(f);
    std::map<int, int> index_of;
    for (std::size_t i = 0; i < probe.group.size(); i++) {
        index_of[map_key(f, probe.group[i])] = static_cast<int>(i);
        probe.phases.push_back(coboundary_between(pullback(table, probe.group[i]), table));
    }
    int count = static_cast<int>(probe.group.size());
    std::vector<int> product(count * count);
    for (int a = 0; a < count; a++) {
        for (int b = 0; b < count; b++) {
            product[a * count + b] = index_of.at(map_key(f, compose(f, probe.group[a], probe.group[b])));
        }
    }
    std::vector<std::vector<int>> images(count);
    for (int a = 0; a < count; a++) {
        for (int v = 0; v < n; v++) {
            images[a].push_back(apply(space, probe.group[a], v));
        }
    }
    auto count_defects = [&](const std::vector<PhaseFunction> &phases) {
        long long bad = 0;
        for (int a = 0; a < count; a++) {
            for (int b = 0; b < count; b++) {
                const auto &ab = phases[product[a * count + b]].values;
                for (int v = 0; v < n; v++) {
                    int defect = ab[v] - phases[a].values[images[b][v]] - phases[b].values[v];
                    if (((defect % modulus) + modulus) % modulus != 0) {
                        bad++;
                        break;
                    }
                }
            }
        }
        return bad;
    };
    probe.defective_pairs = count_defects(probe.phases);
    if (f.q() == 2 && probe.defective_pairs > 0) {
        probe.gauge_searched = true;
        int weight = modulus / f.p();
        int identity = index_of.at(map_key(f, identity_map(f)));
        long long combos = 1;
        for (int a = 0; a < count - 1; a++) {
            combos *= n;
        }
        for (long long code = 0; code < combos; code++) {
            std::vector<PhaseFunction> trial = probe.phases;
            long long rest = code;
            for (int a = 0; a < count; a++) {
                if (a == identity) {
                    continue;
                }
                int w = static_cast<int>(rest % n);
                rest /= n;
                for (int v = 0; v < n; v++) {
                    trial[a].values[v] =
                        static_cast<std::uint8_t>((trial[a].values[v] + weight * space.bicharacter(system.form(), v, w)) %
                                                  modulus);
                }
            }
            if (count_defects(trial) == 0) {
                probe.phases = std::move(trial);
                probe.defective_pairs = 0;
                break;
            }
        }
    }
    probe.defect_free = probe.defective_pairs == 0;
    for (int a = 0; a < count; a++) {
        WeylSystem target = rephased(pulled_system(system, probe.group[a]), probe.phases[a]);
        probe.unitaries.push_back(intertwining_unitary(system, target, tol));
    }
    return probe;
}

}  // namespace covmub
