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

#include "covmub/multiplier.hpp"

#include <algorithm>

#include "covmub/error.hpp"
#include "covmub/kernels.hpp"
#include "covmub/symplectic.hpp"

namespace covmub {

namespace {

constexpr int max_enumeration_order = 8;

std::uint8_t reduce(int k, int modulus) {
    k %= modulus;
    return static_cast<std::uint8_t>(k < 0 ? k + modulus : k);
}

void require_same_space(const MultiplierTable &a, const MultiplierTable &b) {
    if (!(a.space() == b.space())) {
        throw Error(ErrorKind::FieldMismatch, "multipliers over different fields");
    }
}

// Exponent scale turning a Z_p trace value into an exponent mod L.
int trace_weight(const Field &field) {
    return phase_modulus(field) / field.p();
}

std::vector<int> point_images(const PhaseSpace &space, const LinearMap2 &map) {
    std::vector<int> out(space.size());
    for (int u = 0; u < space.size(); u++) {
        out[u] = apply(space, map, u);
    }
    return out;
}

}  // namespace

int phase_modulus(const Field &field) {
    return field.p() == 2 ? 4 : field.p();
}

MultiplierTable::MultiplierTable(PhaseSpace space, std::vector<std::uint8_t> values)
    : space_(std::move(space)), modulus_(phase_modulus(space_.field())), values_(std::move(values)) {
    std::size_t n = static_cast<std::size_t>(space_.size());
    if (values_.size() != n * n) {
        throw Error(ErrorKind::InconsistentDimension, "multiplier table must have q^4 entries");
    }
    for (auto v : values_) {
        if (v >= modulus_) {
            throw Error(ErrorKind::InvalidInput, "multiplier exponent outside [0, L)");
        }
    }
}

MultiplierTable MultiplierTable::conjugate() const {
    std::vector<std::uint8_t> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); i++) {
        out[i] = reduce(-values_[i], modulus_);
    }
    return MultiplierTable(space_, std::move(out));
}

bool MultiplierTable::operator==(const MultiplierTable &other) const {
    return space_ == other.space_ && values_ == other.values_;
}

std::optional<std::array<int, 3>> cocycle_failure(const MultiplierTable &table) {
    int n = table.size();
    long long hit = kernels::parallel::first_cocycle_failure(table.values().data(), n,
                                                             table.space().addition_table().data(), table.modulus());
    if (hit < 0) {
        return std::nullopt;
    }
    return std::array<int, 3>{static_cast<int>(hit / n / n), static_cast<int>(hit / n % n), static_cast<int>(hit % n)};
}

bool is_multiplier(const MultiplierTable &table) {
    return !cocycle_failure(table).has_value();
}

bool is_weyl_multiplier(const MultiplierTable &table, SymplecticForm form) {
    if (!is_multiplier(table)) {
        throw Error(ErrorKind::NotACocycle, "table fails the cocycle identity");
    }
    const PhaseSpace &space = table.space();
    for (int d = 0; d < space.num_directions(); d++) {
        for (int u : space.direction_points(d)) {
            for (int v : space.direction_points(d)) {
                if (table.at(u, v) != 0) {
                    return false;
                }
            }
        }
    }
    int weight = trace_weight(space.field());
    int n = space.size();
    for (int u = 0; u < n; u++) {
        for (int v = 0; v < n; v++) {
            int lhs = reduce(table.at(v, u) - table.at(u, v), table.modulus());
            int rhs = reduce(weight * space.bicharacter(form, u, v), table.modulus());
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

MultiplierTable canonical_multiplier(const PhaseSpace &space, SymplecticForm form) {
    const Field &f = space.field();
    symplectic_form(f, form.scale);
    int n = space.size();
    int weight = trace_weight(f);
    std::vector<std::uint8_t> values(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; u++) {
        Elem second = f.mul(form.scale, space.vector(u).x2);
        for (int v = 0; v < n; v++) {
            values[static_cast<std::size_t>(u) * n + v] =
                static_cast<std::uint8_t>(weight * f.trace(f.mul(space.vector(v).x1, second)));
        }
    }
    return MultiplierTable(space, std::move(values));
}

MultiplierTable symmetric_multiplier(const PhaseSpace &space, SymplecticForm form) {
    const Field &f = space.field();
    if (f.p() == 2) {
        throw Error(ErrorKind::EvenCharacteristic, "the symmetric multiplier needs 2 to be invertible");
    }
    symplectic_form(f, form.scale);
    Elem half = f.inv(f.from_integer(2));
    int n = space.size();
    std::vector<std::uint8_t> values(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; u++) {
        for (int v = 0; v < n; v++) {
            values[static_cast<std::size_t>(u) * n + v] =
                static_cast<std::uint8_t>(space.bicharacter(form, space.scale(half, v), u));
        }
    }
    return MultiplierTable(space, std::move(values));
}

int dual_basis_phase(const Field &field, Elem slope, Elem g) {
    int count = 0;
    for (Elem e : scaled_dual_basis(field, slope)) {
        count += field.trace(field.mul(field.mul(slope, g), e));
    }
    return count % 4;
}

MultiplierTable dual_basis_multiplier(const PhaseSpace &space, SymplecticForm form) {
    const Field &f = space.field();
    if (f.p() != 2) {
        throw Error(ErrorKind::OddCharacteristic, "the dual-basis multiplier is defined for p = 2");
    }
    symplectic_form(f, form.scale);
    std::vector<std::vector<Elem>> bases(f.q());
    for (int s = 1; s < f.q(); s++) {
        bases[s] = scaled_dual_basis(f, f.element(s));
    }
    PhaseFunction phase;
    phase.values.assign(space.size(), 0);
    for (int u = 0; u < space.size(); u++) {
        // Coordinates in the basis (1, 0), (0, 1/scale).
        Elem first = space.vector(u).x1;
        Elem second = f.mul(form.scale, space.vector(u).x2);
        if (first == f.zero() || second == f.zero()) {
            continue;
        }
        Elem slope = f.div(second, first);
        int count = 0;
        for (Elem e : bases[slope.index]) {
            count += f.trace(f.mul(f.mul(slope, first), e));
        }
        phase.values[u] = static_cast<std::uint8_t>(count % 4);
    }
    return twist(canonical_multiplier(space, form), phase);
}

MultiplierTable reference_weyl_multiplier(const PhaseSpace &space, SymplecticForm form) {
    return space.field().p() == 2 ? dual_basis_multiplier(space, form) : symmetric_multiplier(space, form);
}

MultiplierTable twist(const MultiplierTable &table, const PhaseFunction &phase) {
    const PhaseSpace &space = table.space();
    int n = space.size();
    if (static_cast<int>(phase.values.size()) != n) {
        throw Error(ErrorKind::InconsistentDimension, "phase function size differs from q^2");
    }
    const auto &addition = space.addition_table();
    int modulus = table.modulus();
    std::vector<std::uint8_t> values(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; u++) {
        for (int v = 0; v < n; v++) {
            std::size_t i = static_cast<std::size_t>(u) * n + v;
            values[i] = reduce(table.values()[i] + phase.values[addition[i]] - phase.values[u] - phase.values[v],
                               modulus);
        }
    }
    return MultiplierTable(space, std::move(values));
}

PhaseFunction coboundary_between(const MultiplierTable &from, const MultiplierTable &to) {
    require_same_space(from, to);
    const PhaseSpace &space = from.space();
    const Field &f = space.field();
    int modulus = from.modulus();
    int n = space.size();
    auto difference = [&](int u, int v) { return to.at(u, v) - from.at(u, v); };

    std::vector<int> generators;
    for (int axis = 0; axis < 2; axis++) {
        for (int i = 0; i < f.r(); i++) {
            std::vector<int> c(f.r(), 0);
            c[i] = 1;
            Elem b = f.from_coeffs(c);
            generators.push_back(space.index(axis == 0 ? PhaseVector{b, f.zero()} : PhaseVector{f.zero(), b}));
        }
    }
    PhaseFunction phase;
    phase.values.assign(n, 0);
    std::vector<int> span = {0};
    for (int g : generators) {
        std::size_t existing = span.size();
        for (std::size_t i = 0; i < existing; i++) {
            int cur = span[i];
            for (int k = 1; k < f.p(); k++) {
                int next = space.add(cur, g);
                phase.values[next] = reduce(phase.values[cur] + difference(cur, g), modulus);
                span.push_back(next);
                cur = next;
            }
        }
    }
    if (!(twist(from, phase) == to)) {
        throw Error(ErrorKind::NotEquivalent, "multipliers do not differ by a coboundary");
    }
    return phase;
}

PhaseFunction intertwiner(const MultiplierTable &from, const MultiplierTable &to, SymplecticForm form) {
    require_same_space(from, to);
    if (!is_weyl_multiplier(from, form) || !is_weyl_multiplier(to, form)) {
        throw Error(ErrorKind::NotAWeylMultiplier, "intertwiners are computed between Weyl multipliers");
    }
    return coboundary_between(from, to);
}

bool is_character_on_directions(const PhaseSpace &space, const PhaseFunction &phase) {
    int modulus = phase_modulus(space.field());
    for (int d = 0; d < space.num_directions(); d++) {
        for (int u : space.direction_points(d)) {
            for (int v : space.direction_points(d)) {
                if (reduce(phase.values[u] + phase.values[v] - phase.values[space.add(u, v)], modulus) != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

MultiplierTable pullback(const MultiplierTable &table, const LinearMap2 &map) {
    const PhaseSpace &space = table.space();
    inverse(space.field(), map);
    auto image = point_images(space, map);
    int n = space.size();
    std::vector<std::uint8_t> values(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; u++) {
        for (int v = 0; v < n; v++) {
            values[static_cast<std::size_t>(u) * n + v] = static_cast<std::uint8_t>(table.at(image[u], image[v]));
        }
    }
    return MultiplierTable(space, std::move(values));
}

WeylMultiplierFamily::WeylMultiplierFamily(MultiplierTable reference, SymplecticForm form)
    : reference_(std::move(reference)), form_(form), count_(1) {
    for (int i = 0; i + 1 < reference_.space().q(); i++) {
        count_ *= reference_.space().q();
    }
}

std::vector<Elem> WeylMultiplierFamily::parameters(long long k) const {
    if (k < 0 || k >= count_) {
        throw Error(ErrorKind::InvalidInput, "multiplier index " + std::to_string(k) + " out of range");
    }
    int q = space().q();
    std::vector<Elem> out(q - 1);
    for (int d = q - 1; d >= 1; d--) {
        out[d - 1] = Elem{static_cast<std::uint16_t>(k % q)};
        k /= q;
    }
    return out;
}

PhaseFunction WeylMultiplierFamily::phase(long long k) const {
    const PhaseSpace &s = space();
    const Field &f = s.field();
    auto params = parameters(k);
    int weight = trace_weight(f);
    PhaseFunction out;
    out.values.assign(s.size(), 0);
    for (int d = 1; d < s.q(); d++) {
        const auto &pts = s.direction_points(d);
        for (int g = 0; g < s.q(); g++) {
            out.values[pts[g]] = static_cast<std::uint8_t>(weight * f.trace(f.mul(params[d - 1], Elem{static_cast<std::uint16_t>(g)})));
        }
    }
    return out;
}

MultiplierTable WeylMultiplierFamily::operator[](long long k) const {
    return twist(reference_, phase(k));
}

long long WeylMultiplierFamily::index_of(const MultiplierTable &table) const {
    PhaseFunction a = intertwiner(reference_, table, form_);
    const PhaseSpace &s = space();
    const Field &f = s.field();
    int weight = trace_weight(f);
    long long k = 0;
    for (int d = 1; d < s.q(); d++) {
        const auto &pts = s.direction_points(d);
        int found = -1;
        for (Elem c : f.elements()) {
            bool match = true;
            for (int g = 0; g < s.q() && match; g++) {
                match = a.values[pts[g]] == weight * f.trace(f.mul(c, Elem{static_cast<std::uint16_t>(g)}));
            }
            if (match) {
                found = c.index;
                break;
            }
        }
        if (found < 0) {
            throw Error(ErrorKind::NotAWeylMultiplier, "twist is not a character on a direction");
        }
        k = k * s.q() + found;
    }
    return k;
}

WeylMultiplierFamily enumerate_weyl_multipliers(const PhaseSpace &space, SymplecticForm form) {
    if (space.q() > max_enumeration_order) {
        throw Error(ErrorKind::FieldTooLarge, "enumeration is limited to q <= 8");
    }
    return WeylMultiplierFamily(reference_weyl_multiplier(space, form), form);
}

std::vector<long long> invariant_multiplier_indices(const WeylMultiplierFamily &family,
                                                    const std::vector<LinearMap2> &group) {
    const PhaseSpace &space = family.space();
    const Field &f = space.field();
    std::vector<std::vector<int>> images;
    for (const auto &a : group) {
        if (determinant(f, a) != f.one()) {
            throw Error(ErrorKind::NonSymplecticElement, "group element with determinant != 1");
        }
        if (a != identity_map(f)) {
            images.push_back(point_images(space, a));
        }
    }
    const auto &addition = space.addition_table();
    const MultiplierTable &ref = family.reference();
    int n = space.size();
    int modulus = ref.modulus();
    return kernels::parallel::filter_indices(family.size(), [&](long long k) {
        PhaseFunction a = family.phase(k);
        auto entry = [&](int u, int v) {
            return reduce(ref.at(u, v) + a.values[addition[static_cast<std::size_t>(u) * n + v]] - a.values[u] -
                              a.values[v],
                          modulus);
        };
        for (const auto &img : images) {
            for (int u = 0; u < n; u++) {
                for (int v = 0; v < n; v++) {
                    if (entry(img[u], img[v]) != entry(u, v)) {
                        return false;
                    }
                }
            }
        }
        return true;
    });
}

std::vector<MultiplierTable> invariant_multipliers(const PhaseSpace &space, SymplecticForm form,
                                                   const std::vector<LinearMap2> &group) {
    auto family = enumerate_weyl_multipliers(space, form);
    std::vector<MultiplierTable> out;
    for (long long k : invariant_multiplier_indices(family, group)) {
        out.push_back(family[k]);
    }
    return out;
}

MultiplierTable torus_average(const MultiplierTable &table, const std::vector<LinearMap2> &torus) {
    const PhaseSpace &space = table.space();
    if (space.field().p() != 2) {
        throw Error(ErrorKind::OddCharacteristic, "torus averaging is used for p = 2");
    }
    validate_torus(space.field(), torus);
    std::vector<int> sum(table.values().size(), 0);
    for (const auto &a : torus) {
        auto pulled = pullback(table, a);
        for (std::size_t i = 0; i < sum.size(); i++) {
            sum[i] += pulled.values()[i];
        }
    }
    std::vector<std::uint8_t> values(sum.size());
    for (std::size_t i = 0; i < sum.size(); i++) {
        values[i] = reduce(sum[i], table.modulus());
    }
    return MultiplierTable(space, std::move(values));
}

}  // namespace covmub
