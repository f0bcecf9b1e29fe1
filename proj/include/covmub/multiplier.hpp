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

#ifndef COVMUB_MULTIPLIER_HPP
#define COVMUB_MULTIPLIER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "covmub/linalg.hpp"
#include "covmub/phase_space.hpp"

namespace covmub {

/// Phases are stored as exponents k of exp(2 pi i k / L), with L = p for odd p
/// and L = 4 for p = 2.
int phase_modulus(const Field &field);

/// A function V x V -> mu_L, read with the convention
/// W(u + v) = m(u, v) W(u) W(v), equivalently W(u) W(v) = conj(m(u, v)) W(u + v).
class MultiplierTable {
   public:
    /// values is row-major over point indices, each in [0, L).
    MultiplierTable(PhaseSpace space, std::vector<std::uint8_t> values);

    const PhaseSpace &space() const {
        return space_;
    }
    const Field &field() const {
        return space_.field();
    }
    int modulus() const {
        return modulus_;
    }
    int size() const {
        return space_.size();
    }
    int at(int u, int v) const {
        return values_[static_cast<std::size_t>(u) * size() + v];
    }
    Complex value(int u, int v) const {
        return root_of_unity(at(u, v), modulus_);
    }
    const std::vector<std::uint8_t> &values() const {
        return values_;
    }
    MultiplierTable conjugate() const;

    bool operator==(const MultiplierTable &other) const;

   private:
    PhaseSpace space_;
    int modulus_;
    std::vector<std::uint8_t> values_;
};

/// A function V -> mu_L stored as exponents, value at the origin 0.
struct PhaseFunction {
    std::vector<std::uint8_t> values;
    bool operator==(const PhaseFunction &) const = default;
};

/// m(g1+g2, g3) m(g1, g2) = m(g1, g2+g3) m(g2, g3) for all triples.
bool is_multiplier(const MultiplierTable &table);
/// The first violating triple, if any.
std::optional<std::array<int, 3>> cocycle_failure(const MultiplierTable &table);

/// Trivial on every direction and conj(m(u, v)) m(v, u) = exp(2 pi i Tr S(u, v) / p).
/// Throws NotACocycle if the table fails the cocycle identity.
bool is_weyl_multiplier(const MultiplierTable &table, SymplecticForm form);

/// exp(2 pi i Tr(b1 a2) / p) in coordinates (a1, a2), (b1, b2) of the basis
/// (1, 0), (0, 1/scale) with S(e1, e2) = 1. This is the multiplier of the
/// clock-and-shift operators; it is trivial on both axes but not on the other
/// directions, so it is not a Weyl multiplier.
MultiplierTable canonical_multiplier(const PhaseSpace &space, SymplecticForm form);

/// m(u, v) = exp(2 pi i Tr S(v / 2, u) / p). Throws EvenCharacteristic.
MultiplierTable symmetric_multiplier(const PhaseSpace &space, SymplecticForm form);

/// Quarter-turn phase of g on the direction of slope `slope` (p = 2): i^(number of
/// nonzero coordinates of g in the scaled dual basis for `slope`), as an exponent mod 4.
int dual_basis_phase(const Field &field, Elem slope, Elem g);

/// Characteristic-2 Weyl multiplier conj(a(u) a(v)) a(u + v) times the canonical
/// multiplier, where a is the quarter-turn phase on each non-axis direction and
/// 1 on the axes. Throws OddCharacteristic.
MultiplierTable dual_basis_multiplier(const PhaseSpace &space, SymplecticForm form);

/// The base multiplier used for enumeration: symmetric for odd p, dual-basis for p = 2.
MultiplierTable reference_weyl_multiplier(const PhaseSpace &space, SymplecticForm form);

/// conj(a(u) a(v)) a(u + v) m(u, v).
MultiplierTable twist(const MultiplierTable &table, const PhaseFunction &phase);

/// a with a(0) = 1 and to = twist(from, a), built by telescoping along the
/// Z_p-basis {b e1} then {b e2} (b over the polynomial basis) with a = 1 on
/// those generators. Throws NotEquivalent if no such a exists.
PhaseFunction coboundary_between(const MultiplierTable &from, const MultiplierTable &to);

/// As coboundary_between, for two Weyl multipliers of the same form. Throws
/// NotAWeylMultiplier if either fails, NotEquivalent otherwise.
PhaseFunction intertwiner(const MultiplierTable &from, const MultiplierTable &to, SymplecticForm form);

/// True iff phase restricted to every direction is a character of that direction.
bool is_character_on_directions(const PhaseSpace &space, const PhaseFunction &phase);

/// m_A(u, v) = m(Au, Av). Throws SingularMap.
MultiplierTable pullback(const MultiplierTable &table, const LinearMap2 &map);

/// All Weyl multipliers of one form: the reference multiplier twisted by phase
/// functions that are characters on each direction, modulo characters of V.
///
/// The quotient is represented by phase functions trivial on both axes, so the
/// family has q^(q-1) members. Members are materialised on demand, ordered by
/// the character parameters (c_1, ..., c_{q-1}) of the non-axis directions with
/// c_1 most significant.
class WeylMultiplierFamily {
   public:
    WeylMultiplierFamily(MultiplierTable reference, SymplecticForm form);

    long long size() const {
        return count_;
    }
    SymplecticForm form() const {
        return form_;
    }
    const MultiplierTable &reference() const {
        return reference_;
    }
    const PhaseSpace &space() const {
        return reference_.space();
    }
    /// Character parameter of each non-axis direction for member k.
    std::vector<Elem> parameters(long long k) const;
    PhaseFunction phase(long long k) const;
    MultiplierTable operator[](long long k) const;
    /// Member index of a Weyl multiplier of this form.
    long long index_of(const MultiplierTable &table) const;

   private:
    MultiplierTable reference_;
    SymplecticForm form_;
    long long count_;
};

/// Throws FieldTooLarge for q > 8.
WeylMultiplierFamily enumerate_weyl_multipliers(const PhaseSpace &space, SymplecticForm form);

/// Members of the family with m_A = m for every A in group (exhaustive fixed-point search).
/// Throws NonSymplecticElement if some A has det != 1.
std::vector<long long> invariant_multiplier_indices(const WeylMultiplierFamily &family,
                                                    const std::vector<LinearMap2> &group);
std::vector<MultiplierTable> invariant_multipliers(const PhaseSpace &space, SymplecticForm form,
                                                   const std::vector<LinearMap2> &group);

/// Product of the pullbacks of m over the torus (p = 2). Throws OddCharacteristic
/// or NotATorus.
MultiplierTable torus_average(const MultiplierTable &table, const std::vector<LinearMap2> &torus);

}  // namespace covmub

#endif
