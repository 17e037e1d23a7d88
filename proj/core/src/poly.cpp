/*
   Copyright 2026 The minreal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "minreal/poly.hpp"

#include <algorithm>

namespace minreal {

Poly::Poly(const Field& field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) check_same_field(field_, c.field());
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(FieldElement c) {
    Poly p(c.field());
    p.coeffs_.push_back(std::move(c));
    p.normalize();
    return p;
}

Poly Poly::from_ints(const Field& field, std::initializer_list<long long> ascending) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(ascending.size());
    for (long long v : ascending) coeffs.emplace_back(field, v);
    return Poly(field, std::move(coeffs));
}

Poly Poly::monomial(FieldElement c, std::size_t exponent) {
    Poly p(c.field());
    if (!c.is_zero()) {
        p.coeffs_.assign(exponent + 1, FieldElement::zero(c.field()));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

FieldElement Poly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return FieldElement::zero(field_);
}

FieldElement Poly::leading_coeff() const {
    if (is_zero()) throw UsageError("the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_same_field(field_, rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_same_field(field_, rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    check_same_field(lhs.field_, rhs.field_);
    if (lhs.is_zero() || rhs.is_zero()) return Poly(lhs.field_);
    std::vector<FieldElement> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1,
                                  FieldElement::zero(lhs.field_));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(lhs.field_, std::move(out));
}

Poly operator*(const FieldElement& scalar, const Poly& p) {
    check_same_field(scalar.field(), p.field());
    Poly out = p;
    for (auto& c : out.coeffs_) c *= scalar;
    out.normalize();
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(FieldElement::one(field_));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(field_);
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out.push_back(FieldElement(field_, static_cast<long long>(i)) * coeffs_[i]);
    return Poly(field_, std::move(out));
}

FieldElement Poly::eval(const FieldElement& x) const {
    check_same_field(field_, x.field());
    FieldElement acc = FieldElement::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw UsageError("cannot normalize the zero polynomial to monic");
    if (is_monic()) return *this;
    return leading_coeff().inverse() * *this;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = degree(); e >= 0; --e) {
        FieldElement c = coeff(static_cast<std::size_t>(e));
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negative = false;
        if (!cs.empty() && cs[0] == '-') {
            negative = true;
            cs.erase(cs.begin());
        }
        if (out.empty()) {
            if (negative) out = "0-";  // keeps the printed form inside the grammar
        } else {
            out += negative ? "-" : "+";
        }
        const bool unit = c.is_one() || (negative && cs == "1");
        if (e == 0) {
            out += cs;
        } else {
            if (!unit) out += cs + "*";
            out += e == 1 ? "s" : "s^" + std::to_string(e);
        }
    }
    return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    check_same_field(a.field(), b.field());
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    const Field& field = a.field();
    if (a.degree() < b.degree()) return {Poly(field), a};

    std::vector<FieldElement> rem(a.coeffs());
    const auto db = static_cast<std::size_t>(b.degree());
    const FieldElement lead_inv = b.leading_coeff().inverse();
    std::vector<FieldElement> quo(rem.size() - db, FieldElement::zero(field));
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const FieldElement factor = rem[k] * lead_inv;
        quo[k - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeff(j);
    }
    return {Poly(field, std::move(quo)), Poly(field, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return poly_divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

ExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
    check_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero()) throw UsageError("gcd of two zero polynomials");
    const Field& field = a.field();
    const Poly zero(field);
    const Poly one = Poly::constant(FieldElement::one(field));

    Poly r0 = a, r1 = b;
    Poly u0 = one, u1 = zero;
    Poly v0 = zero, v1 = one;
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        u0 = std::exchange(u1, u0 - q * u1);
        v0 = std::exchange(v1, v0 - q * v1);
    }
    const FieldElement scale = r0.leading_coeff().inverse();
    return {scale * r0, scale * u0, scale * v0};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    check_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero()) throw UsageError("gcd of two zero polynomials");
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r = r0 % r1;
        r0 = std::exchange(r1, std::move(r));
    }
    return r0.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return ((a * b) / poly_gcd(a, b)).monic();
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const int c = canonical_compare(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

int vec_degree(const PolyVec& v) {
    int deg = -1;
    for (const auto& p : v) deg = std::max(deg, p.degree());
    return deg;
}

PolyVec PadicExpansion::reassemble() const {
    PolyVec out(width, Poly(base.field()));
    Poly power = Poly::constant(FieldElement::one(base.field()));
    for (const auto& digit : digits) {
        for (std::size_t j = 0; j < width; ++j) out[j] += digit[j] * power;
        power = power * base;
    }
    return out;
}

PadicExpansion padic_expand(const PolyVec& v, const Poly& base) {
    if (base.degree() < 1) throw UsageError("expansion base must have degree at least 1");
    if (!base.is_monic()) throw UsageError("expansion base must be monic");
    for (const auto& entry : v) check_same_field(base.field(), entry.field());

    PadicExpansion out{base, v.size(), {}};
    std::vector<PolyVec> columns;  // per entry: its scalar digit list
    std::size_t digit_count = 0;
    for (const auto& entry : v) {
        PolyVec digits_of_entry;
        Poly rest = entry;
        while (!rest.is_zero()) {
            auto [q, r] = poly_divmod(rest, base);
            digits_of_entry.push_back(std::move(r));
            rest = std::move(q);
        }
        digit_count = std::max(digit_count, digits_of_entry.size());
        columns.push_back(std::move(digits_of_entry));
    }
    for (std::size_t i = 0; i < digit_count; ++i) {
        PolyVec digit;
        digit.reserve(v.size());
        for (const auto& column : columns)
            digit.push_back(i < column.size() ? column[i] : Poly(base.field()));
        out.digits.push_back(std::move(digit));
    }
    return out;
}

Matrix coeff_matrix(const PolyVec& digit, std::size_t n, const Field& field) {
    Matrix out(field, digit.size(), n);
    for (std::size_t i = 0; i < digit.size(); ++i) {
        check_same_field(field, digit[i].field());
        if (digit[i].degree() >= static_cast<int>(n))
            throw UsageError("entry degree exceeds the requested coefficient width");
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = digit[i].coeff(j);
    }
    return out;
}

}  // namespace minreal
