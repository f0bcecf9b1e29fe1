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

#ifndef COVMUB_FINITE_FIELD_HPP
#define COVMUB_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace covmub {

/// A field element, stored as its polynomial-basis coefficient vector packed
/// in base p: index = c_0 + c_1 p + ... + c_{r-1} p^{r-1}.
///
/// The packed index also defines the "field order" used everywhere for
/// deterministic iteration.
struct Elem {
    std::uint16_t index = 0;
    friend auto operator<=>(Elem, Elem) = default;
};

namespace detail {
struct FieldTables;
}

/// GF(p^r) in a polynomial basis over a fixed irreducible monic modulus.
///
/// Cheap to copy: the arithmetic tables are shared and immutable.
class Field {
   public:
    static constexpr int max_order = 256;

    /// Uses the canonical modulus: the irreducible monic polynomial of degree r
    /// whose packed coefficient vector (leading coefficient most significant)
    /// is smallest.
    static Field make(int p, int r);
    /// modulus is c_0..c_r (lowest degree first) and must be monic of degree r.
    static Field make(int p, int r, const std::vector<int> &modulus);
    /// Parses "p^r", "p**r", or a bare prime power q.
    static Field parse(const std::string &text);

    int p() const;
    int r() const;
    int q() const;
    const std::vector<int> &modulus() const;
    std::string name() const;

    Elem zero() const {
        return Elem{0};
    }
    Elem one() const {
        return Elem{1};
    }
    /// Throws InvalidInput unless 0 <= index < q.
    Elem element(int index) const;
    /// Image of an integer in the prime subfield.
    Elem from_integer(long long n) const;
    Elem from_coeffs(std::span<const int> coeffs) const;
    std::vector<int> coeffs(Elem a) const;
    std::vector<Elem> elements() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws ZeroInverse for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, long long e) const;

    /// Absolute trace to the prime field, returned as an integer in [0, p).
    int trace(Elem a) const;
    /// Multiplicative order; throws ZeroInverse for 0.
    int multiplicative_order(Elem a) const;
    /// Smallest element (in field order) generating the multiplicative group.
    Elem primitive_element() const;

    const std::uint16_t *add_table() const;
    const std::uint16_t *mul_table() const;
    const std::uint8_t *trace_table() const;

    bool operator==(const Field &other) const;

   private:
    explicit Field(std::shared_ptr<const detail::FieldTables> tables);
    std::shared_ptr<const detail::FieldTables> tables_;
};

/// True iff the monic polynomial c_0..c_n has no monic factor of degree 1..n/2 over Z_p.
bool is_irreducible_polynomial(int p, const std::vector<int> &coeffs);
/// The canonical modulus used by Field::make(p, r).
std::vector<int> canonical_modulus(int p, int r);
bool is_prime(int n);

/// An element bundled with its field, so arithmetic can reject mixing fields.
class FieldElement {
   public:
    FieldElement(Field field, Elem value);

    const Field &field() const {
        return field_;
    }
    Elem value() const {
        return value_;
    }
    std::vector<int> coeffs() const {
        return field_.coeffs(value_);
    }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator/(const FieldElement &other) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long long e) const;
    int trace() const {
        return field_.trace(value_);
    }
    bool operator==(const FieldElement &other) const;

   private:
    const Field &checked(const FieldElement &other) const;
    Field field_;
    Elem value_;
};

/// Basis w_1..w_r of GF(2^r) over GF(2) with Tr(w_i w_j) = [i == j].
/// The lexicographically smallest such set in field order. Throws OddCharacteristic.
std::vector<Elem> self_dual_basis(const Field &field);

/// Basis e_i = g^{-1} w_i with g^2 = scale, so that Tr(scale e_i e_j) = [i == j].
/// Throws ZeroScale for scale == 0 and OddCharacteristic for odd p.
std::vector<Elem> scaled_dual_basis(const Field &field, Elem scale);

/// Element c_0 + c_1 t of the quadratic extension, t a root of the fixed irreducible
/// quadratic over the base field.
struct ExtElem {
    Elem c0;
    Elem c1;
    friend auto operator<=>(const ExtElem &, const ExtElem &) = default;
};

/// Degree-two extension of a base field, with t^2 = -lin t - con for the first
/// irreducible X^2 + lin X + con in (lin, con) field order.
class QuadraticExtension {
   public:
    explicit QuadraticExtension(Field base);

    const Field &base() const {
        return base_;
    }
    Elem linear_coefficient() const {
        return lin_;
    }
    Elem constant_coefficient() const {
        return con_;
    }
    int order() const {
        return base_.q() * base_.q();
    }
    /// Elements in order of c0 + q * c1.
    ExtElem element(int index) const;
    int index(ExtElem z) const;
    ExtElem embed(Elem a) const {
        return ExtElem{a, base_.zero()};
    }

    ExtElem add(ExtElem a, ExtElem b) const;
    ExtElem mul(ExtElem a, ExtElem b) const;
    ExtElem pow(ExtElem a, long long e) const;
    /// The nontrivial automorphism over the base, z -> z^q.
    ExtElem conj(ExtElem a) const;
    /// z * conj(z), which lies in the base field.
    Elem norm(ExtElem a) const;
    int multiplicative_order(ExtElem a) const;

    /// Smallest element (by index) of multiplicative order q^2 - 1.
    ExtElem generator() const;
    /// generator()^(q-1): generates the norm-one subgroup of order q + 1.
    ExtElem norm_one_generator() const;

   private:
    Field base_;
    Elem lin_;
    Elem con_;
};

}  // namespace covmub

#endif
