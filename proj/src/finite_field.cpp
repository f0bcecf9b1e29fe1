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

#include "covmub/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "covmub/error.hpp"

namespace covmub {

namespace detail {

struct FieldTables {
    int p = 0;
    int r = 0;
    int q = 0;
    std::vector<int> modulus;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> neg;
    std::vector<std::uint16_t> inv;
    std::vector<std::uint8_t> trace;
};

}  // namespace detail

namespace {

using Poly = std::vector<int>;

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

int mod_p(long long v, int p) {
    v %= p;
    return static_cast<int>(v < 0 ? v + p : v);
}

int inverse_mod_p(int a, int p) {
    int result = 1;
    int base = a;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
    }
    return result;
}

// Remainder of a modulo the nonzero polynomial m over Z_p.
Poly poly_rem(Poly a, const Poly &m, int p) {
    trim(a);
    int dm = static_cast<int>(m.size()) - 1;
    int lead_inv = inverse_mod_p(m.back(), p);
    while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
        int shift = static_cast<int>(a.size()) - 1 - dm;
        int factor = a.back() * lead_inv % p;
        for (int i = 0; i <= dm; i++) {
            a[i + shift] = mod_p(a[i + shift] - static_cast<long long>(factor) * m[i], p);
        }
        trim(a);
    }
    return a;
}

Poly unpack(int index, int p, int len) {
    Poly c(len);
    for (int i = 0; i < len; i++) {
        c[i] = index % p;
        index /= p;
    }
    return c;
}

int pack(const Poly &c, int p) {
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; i--) {
        v = v * p + c[i];
    }
    return v;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

// Order of an element of a cyclic group of order group_order, given a power function.
template <typename PowIsOne>
int order_in_cyclic_group(long long group_order, PowIsOne pow_is_one) {
    long long order = group_order;
    for (long long f : prime_factors(group_order)) {
        while (order % f == 0 && pow_is_one(order / f)) {
            order /= f;
        }
    }
    return static_cast<int>(order);
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

bool is_irreducible_polynomial(int p, const std::vector<int> &coeffs) {
    Poly f = coeffs;
    trim(f);
    int n = static_cast<int>(f.size()) - 1;
    if (n < 1) {
        return false;
    }
    for (int d = 1; 2 * d <= n; d++) {
        int count = 1;
        for (int i = 0; i < d; i++) {
            count *= p;
        }
        for (int low = 0; low < count; low++) {
            Poly g = unpack(low, p, d);
            g.push_back(1);
            if (poly_rem(f, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int> canonical_modulus(int p, int r) {
    int count = 1;
    for (int i = 0; i < r; i++) {
        count *= p;
    }
    for (int low = 0; low < count; low++) {
        Poly f = unpack(low, p, r);
        f.push_back(1);
        if (is_irreducible_polynomial(p, f)) {
            return f;
        }
    }
    throw Error(ErrorKind::ReduciblePolynomial, "no irreducible polynomial found");
}

Field::Field(std::shared_ptr<const detail::FieldTables> tables) : tables_(std::move(tables)) {
}

Field Field::make(int p, int r) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    }
    if (r < 1) {
        throw Error(ErrorKind::DegreeMismatch, "extension degree must be positive");
    }
    long long q = 1;
    for (int i = 0; i < r; i++) {
        q *= p;
        if (q > max_order) {
            throw Error(ErrorKind::FieldTooLarge, "field order exceeds " + std::to_string(max_order));
        }
    }
    return make(p, r, canonical_modulus(p, r));
}

Field Field::make(int p, int r, const std::vector<int> &modulus) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    }
    if (r < 1) {
        throw Error(ErrorKind::DegreeMismatch, "extension degree must be positive");
    }
    long long q = 1;
    for (int i = 0; i < r; i++) {
        q *= p;
        if (q > max_order) {
            throw Error(ErrorKind::FieldTooLarge, "field order exceeds " + std::to_string(max_order));
        }
    }
    for (int c : modulus) {
        if (c < 0 || c >= p) {
            throw Error(ErrorKind::InvalidInput, "modulus coefficients must lie in [0, p)");
        }
    }
    Poly m = modulus;
    trim(m);
    if (static_cast<int>(m.size()) - 1 != r) {
        throw Error(ErrorKind::DegreeMismatch, "modulus degree differs from r = " + std::to_string(r));
    }
    if (m.back() != 1) {
        throw Error(ErrorKind::InvalidInput, "modulus must be monic");
    }
    if (!is_irreducible_polynomial(p, m)) {
        throw Error(ErrorKind::ReduciblePolynomial, "modulus is reducible over Z_" + std::to_string(p));
    }

    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->r = r;
    t->q = static_cast<int>(q);
    t->modulus = m;
    int n = t->q;
    t->add.resize(n * n);
    t->mul.resize(n * n);
    t->neg.resize(n);
    t->inv.resize(n);
    t->trace.resize(n);
    std::vector<Poly> digits(n);
    for (int a = 0; a < n; a++) {
        digits[a] = unpack(a, p, r);
    }
    for (int a = 0; a < n; a++) {
        Poly negated(r);
        for (int i = 0; i < r; i++) {
            negated[i] = mod_p(-digits[a][i], p);
        }
        t->neg[a] = static_cast<std::uint16_t>(pack(negated, p));
        for (int b = 0; b < n; b++) {
            Poly sum(r);
            for (int i = 0; i < r; i++) {
                sum[i] = (digits[a][i] + digits[b][i]) % p;
            }
            t->add[a * n + b] = static_cast<std::uint16_t>(pack(sum, p));
            Poly prod(2 * r - 1, 0);
            for (int i = 0; i < r; i++) {
                for (int j = 0; j < r; j++) {
                    prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
                }
            }
            Poly red = poly_rem(prod, m, p);
            red.resize(r, 0);
            t->mul[a * n + b] = static_cast<std::uint16_t>(pack(red, p));
        }
    }
    for (int a = 1; a < n; a++) {
        for (int b = 1; b < n; b++) {
            if (t->mul[a * n + b] == 1) {
                t->inv[a] = static_cast<std::uint16_t>(b);
                break;
            }
        }
    }
    for (int a = 0; a < n; a++) {
        int acc = 0;
        int power = a;
        for (int i = 0; i < r; i++) {
            acc = t->add[acc * n + power];
            int next = power;
            for (int k = 1; k < p; k++) {
                next = t->mul[next * n + power];
            }
            power = next;
        }
        if (acc >= p) {
            throw Error(ErrorKind::ReduciblePolynomial, "trace left the prime field");
        }
        t->trace[a] = static_cast<std::uint8_t>(acc);
    }
    return Field(std::move(t));
}

Field Field::parse(const std::string &text) {
    std::string s = text;
    std::string base = s;
    std::string exponent = "1";
    auto caret = s.find('^');
    auto stars = s.find("**");
    if (caret != std::string::npos) {
        base = s.substr(0, caret);
        exponent = s.substr(caret + 1);
    } else if (stars != std::string::npos) {
        base = s.substr(0, stars);
        exponent = s.substr(stars + 2);
    }
    auto to_int = [&](const std::string &part) {
        if (part.empty() || part.size() > 6 ||
            !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw Error(ErrorKind::InvalidInput, "cannot parse field descriptor '" + text + "'");
        }
        return std::stoi(part);
    };
    if (caret != std::string::npos || stars != std::string::npos) {
        return make(to_int(base), to_int(exponent));
    }
    // A bare number is read as the field order q = p^r.
    int order = to_int(base);
    if (order < 2) {
        throw Error(ErrorKind::NonPrime, std::to_string(order) + " is not a prime power");
    }
    int p = 2;
    while (order % p != 0) {
        p++;
    }
    int r = 0;
    for (int rest = order; rest > 1; rest /= p) {
        if (rest % p != 0) {
            throw Error(ErrorKind::NonPrime, std::to_string(order) + " is not a prime power");
        }
        r++;
    }
    return make(p, r);
}

int Field::p() const {
    return tables_->p;
}
int Field::r() const {
    return tables_->r;
}
int Field::q() const {
    return tables_->q;
}
const std::vector<int> &Field::modulus() const {
    return tables_->modulus;
}

std::string Field::name() const {
    std::ostringstream out;
    out << "GF(" << p();
    if (r() > 1) {
        out << "^" << r();
    }
    out << ")";
    return out.str();
}

Elem Field::element(int index) const {
    if (index < 0 || index >= q()) {
        throw Error(ErrorKind::InvalidInput, "element index " + std::to_string(index) + " outside " + name());
    }
    return Elem{static_cast<std::uint16_t>(index)};
}

Elem Field::from_integer(long long n) const {
    return Elem{static_cast<std::uint16_t>(mod_p(n, p()))};
}

Elem Field::from_coeffs(std::span<const int> coeffs) const {
    if (static_cast<int>(coeffs.size()) > r()) {
        throw Error(ErrorKind::InvalidInput, "too many coefficients for " + name());
    }
    Poly c(coeffs.begin(), coeffs.end());
    for (int v : c) {
        if (v < 0 || v >= p()) {
            throw Error(ErrorKind::InvalidInput, "coefficient outside [0, p)");
        }
    }
    return Elem{static_cast<std::uint16_t>(pack(c, p()))};
}

std::vector<int> Field::coeffs(Elem a) const {
    return unpack(a.index, p(), r());
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q());
    for (int i = 0; i < q(); i++) {
        out[i] = Elem{static_cast<std::uint16_t>(i)};
    }
    return out;
}

Elem Field::add(Elem a, Elem b) const {
    return Elem{tables_->add[a.index * q() + b.index]};
}
Elem Field::sub(Elem a, Elem b) const {
    return add(a, neg(b));
}
Elem Field::neg(Elem a) const {
    return Elem{tables_->neg[a.index]};
}
Elem Field::mul(Elem a, Elem b) const {
    return Elem{tables_->mul[a.index * q() + b.index]};
}

Elem Field::inv(Elem a) const {
    if (a.index == 0) {
        throw Error(ErrorKind::ZeroInverse, "zero has no inverse");
    }
    return Elem{tables_->inv[a.index]};
}

Elem Field::div(Elem a, Elem b) const {
    return mul(a, inv(b));
}

Elem Field::pow(Elem a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem result = one();
    while (e > 0) {
        if (e & 1) {
            result = mul(result, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

int Field::trace(Elem a) const {
    return tables_->trace[a.index];
}

int Field::multiplicative_order(Elem a) const {
    if (a.index == 0) {
        throw Error(ErrorKind::ZeroInverse, "zero has no multiplicative order");
    }
    return order_in_cyclic_group(q() - 1, [&](long long e) { return pow(a, e) == one(); });
}

Elem Field::primitive_element() const {
    for (int i = 1; i < q(); i++) {
        if (multiplicative_order(Elem{static_cast<std::uint16_t>(i)}) == q() - 1) {
            return Elem{static_cast<std::uint16_t>(i)};
        }
    }
    throw Error(ErrorKind::NoneFound, "no primitive element");
}

const std::uint16_t *Field::add_table() const {
    return tables_->add.data();
}
const std::uint16_t *Field::mul_table() const {
    return tables_->mul.data();
}
const std::uint8_t *Field::trace_table() const {
    return tables_->trace.data();
}

bool Field::operator==(const Field &other) const {
    return tables_ == other.tables_ ||
           (p() == other.p() && r() == other.r() && modulus() == other.modulus());
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (value.index >= field_.q()) {
        throw Error(ErrorKind::InvalidInput, "element index outside " + field_.name());
    }
}

const Field &FieldElement::checked(const FieldElement &other) const {
    if (!(field_ == other.field_)) {
        throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + other.field_.name());
    }
    return field_;
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    return FieldElement(field_, checked(other).add(value_, other.value_));
}
FieldElement FieldElement::operator-(const FieldElement &other) const {
    return FieldElement(field_, checked(other).sub(value_, other.value_));
}
FieldElement FieldElement::operator*(const FieldElement &other) const {
    return FieldElement(field_, checked(other).mul(value_, other.value_));
}
FieldElement FieldElement::operator/(const FieldElement &other) const {
    return FieldElement(field_, checked(other).div(value_, other.value_));
}
FieldElement FieldElement::operator-() const {
    return FieldElement(field_, field_.neg(value_));
}
FieldElement FieldElement::inverse() const {
    return FieldElement(field_, field_.inv(value_));
}
FieldElement FieldElement::pow(long long e) const {
    return FieldElement(field_, field_.pow(value_, e));
}
bool FieldElement::operator==(const FieldElement &other) const {
    return field_ == other.field_ && value_ == other.value_;
}

std::vector<Elem> self_dual_basis(const Field &field) {
    if (field.p() != 2) {
        throw Error(ErrorKind::OddCharacteristic, "self-dual bases are built for characteristic 2 only");
    }
    std::vector<Elem> candidates;
    for (Elem x : field.elements()) {
        if (field.trace(field.mul(x, x)) == 1) {
            candidates.push_back(x);
        }
    }
    int r = field.r();
    std::vector<Elem> chosen;
    // Depth-first over increasing candidates; the first complete set is the smallest.
    auto search = [&](auto &&self, std::size_t start) -> bool {
        if (static_cast<int>(chosen.size()) == r) {
            return true;
        }
        for (std::size_t i = start; i < candidates.size(); i++) {
            bool orthogonal = true;
            for (Elem w : chosen) {
                if (field.trace(field.mul(w, candidates[i])) != 0) {
                    orthogonal = false;
                    break;
                }
            }
            if (!orthogonal) {
                continue;
            }
            chosen.push_back(candidates[i]);
            if (self(self, i + 1)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, 0)) {
        throw Error(ErrorKind::NoneFound, "no self-dual basis");
    }
    return chosen;
}

std::vector<Elem> scaled_dual_basis(const Field &field, Elem scale) {
    if (field.p() != 2) {
        throw Error(ErrorKind::OddCharacteristic, "scaled dual bases are built for characteristic 2 only");
    }
    if (scale == field.zero()) {
        throw Error(ErrorKind::ZeroScale, "scale must be nonzero");
    }
    // Squaring is a bijection in characteristic 2; its inverse is x -> x^(2^(r-1)).
    Elem root = field.pow(scale, 1LL << (field.r() - 1));
    Elem root_inv = field.inv(root);
    std::vector<Elem> out;
    for (Elem w : self_dual_basis(field)) {
        out.push_back(field.mul(root_inv, w));
    }
    return out;
}

QuadraticExtension::QuadraticExtension(Field base) : base_(std::move(base)) {
    for (Elem lin : base_.elements()) {
        for (Elem con : base_.elements()) {
            bool has_root = false;
            for (Elem x : base_.elements()) {
                Elem v = base_.add(base_.add(base_.mul(x, x), base_.mul(lin, x)), con);
                if (v == base_.zero()) {
                    has_root = true;
                    break;
                }
            }
            if (!has_root) {
                lin_ = lin;
                con_ = con;
                return;
            }
        }
    }
    throw Error(ErrorKind::NoneFound, "no irreducible quadratic");
}

ExtElem QuadraticExtension::element(int index) const {
    int q = base_.q();
    if (index < 0 || index >= q * q) {
        throw Error(ErrorKind::InvalidInput, "extension element index out of range");
    }
    return ExtElem{base_.element(index % q), base_.element(index / q)};
}

int QuadraticExtension::index(ExtElem z) const {
    return z.c0.index + base_.q() * z.c1.index;
}

ExtElem QuadraticExtension::add(ExtElem a, ExtElem b) const {
    return ExtElem{base_.add(a.c0, b.c0), base_.add(a.c1, b.c1)};
}

ExtElem QuadraticExtension::mul(ExtElem a, ExtElem b) const {
    const Field &f = base_;
    Elem top = f.mul(a.c1, b.c1);
    Elem c0 = f.sub(f.mul(a.c0, b.c0), f.mul(con_, top));
    Elem c1 = f.sub(f.add(f.mul(a.c0, b.c1), f.mul(a.c1, b.c0)), f.mul(lin_, top));
    return ExtElem{c0, c1};
}

ExtElem QuadraticExtension::pow(ExtElem a, long long e) const {
    ExtElem result = embed(base_.one());
    if (e < 0) {
        throw Error(ErrorKind::InvalidInput, "negative exponent");
    }
    while (e > 0) {
        if (e & 1) {
            result = mul(result, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

ExtElem QuadraticExtension::conj(ExtElem a) const {
    // The other root of X^2 + lin X + con is -lin - t.
    return ExtElem{base_.sub(a.c0, base_.mul(lin_, a.c1)), base_.neg(a.c1)};
}

Elem QuadraticExtension::norm(ExtElem a) const {
    ExtElem n = mul(a, conj(a));
    return n.c0;
}

int QuadraticExtension::multiplicative_order(ExtElem a) const {
    if (a.c0 == base_.zero() && a.c1 == base_.zero()) {
        throw Error(ErrorKind::ZeroInverse, "zero has no multiplicative order");
    }
    ExtElem one = embed(base_.one());
    return order_in_cyclic_group(order() - 1, [&](long long e) { return pow(a, e) == one; });
}

ExtElem QuadraticExtension::generator() const {
    for (int i = 1; i < order(); i++) {
        ExtElem z = element(i);
        if (multiplicative_order(z) == order() - 1) {
            return z;
        }
    }
    throw Error(ErrorKind::NoneFound, "no generator of the extension");
}

ExtElem QuadraticExtension::norm_one_generator() const {
    return pow(generator(), base_.q() - 1);
}

}  // namespace covmub
