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

#include "minreal/field.hpp"

namespace minreal {

namespace {

constexpr std::uint64_t kModulusCap = std::uint64_t(1) << 31;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

// Extended Euclid on the residue; n in [1, p).
std::uint64_t mod_inverse(std::uint64_t n, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(n);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw InternalError("residue not invertible modulo a prime");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::gf(std::uint64_t p) {
    if (p >= kModulusCap) throw UsageError("prime modulus must be below 2^31");
    if (!is_prime(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::prime_field, p);
}

std::uint64_t Field::modulus() const {
    if (!is_prime_field()) throw UsageError("the rational field has no modulus");
    return modulus_;
}

std::string Field::name() const {
    return is_prime_field() ? "gf " + std::to_string(modulus_) : "q";
}

void check_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw UsageError("operands come from different fields (" + a.name() + " vs " + b.name() + ")");
}

FieldElement::FieldElement(const Field& field, long long value) : field_(field) {
    if (field.is_prime_field()) {
        const auto p = static_cast<std::int64_t>(field.modulus());
        std::int64_t r = value % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint64_t>(r);
    } else {
        value_ = mpq_class(static_cast<long>(value));
    }
}

FieldElement FieldElement::from_integer(const Field& field, const mpz_class& value) {
    if (field.is_prime_field()) {
        const std::uint64_t r = mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(field.modulus()));
        FieldElement out(field, 0);
        out.value_ = r;
        return out;
    }
    FieldElement out(field, 0);
    out.value_ = mpq_class(value);
    return out;
}

FieldElement FieldElement::from_rational(const Field& field, const mpq_class& value) {
    if (field.is_prime_field()) {
        FieldElement num = from_integer(field, value.get_num());
        FieldElement den = from_integer(field, value.get_den());
        return num / den;
    }
    mpq_class v = value;
    v.canonicalize();
    FieldElement out(field, 0);
    out.value_ = std::move(v);
    return out;
}

bool FieldElement::is_zero() const {
    if (field_.is_prime_field()) return std::get<std::uint64_t>(value_) == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const {
    if (field_.is_prime_field()) return std::get<std::uint64_t>(value_) == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint64_t FieldElement::residue() const {
    if (!field_.is_prime_field()) throw UsageError("residue() is only defined over GF(p)");
    return std::get<std::uint64_t>(value_);
}

const mpq_class& FieldElement::rational() const {
    if (field_.is_prime_field()) throw UsageError("rational() is only defined over q");
    return std::get<mpq_class>(value_);
}

FieldElement FieldElement::operator-() const {
    FieldElement out = *this;
    if (field_.is_prime_field()) {
        const std::uint64_t p = field_.modulus();
        const std::uint64_t a = std::get<std::uint64_t>(value_);
        out.value_ = a == 0 ? std::uint64_t(0) : p - a;
    } else {
        out.value_ = mpq_class(-std::get<mpq_class>(value_));
    }
    return out;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero in " + field_.name());
    FieldElement out = *this;
    if (field_.is_prime_field()) {
        out.value_ = mod_inverse(std::get<std::uint64_t>(value_), field_.modulus());
    } else {
        out.value_ = mpq_class(1 / std::get<mpq_class>(value_));
    }
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(field_, rhs.field_);
    if (field_.is_prime_field()) {
        value_ = (std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_field(field_, rhs.field_);
    if (field_.is_prime_field()) {
        const std::uint64_t p = field_.modulus();
        value_ = (std::get<std::uint64_t>(value_) + p - std::get<std::uint64_t>(rhs.value_)) % p;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(field_, rhs.field_);
    if (field_.is_prime_field()) {
        // Operands are < 2^31, so the product fits in 64 bits.
        value_ = (std::get<std::uint64_t>(value_) * std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_field(field_, rhs.field_);
    return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) return false;
    if (a.field_.is_prime_field()) {
        return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
    }
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string FieldElement::str() const {
    if (field_.is_prime_field()) return std::to_string(std::get<std::uint64_t>(value_));
    return std::get<mpq_class>(value_).get_str();
}

int canonical_compare(const FieldElement& a, const FieldElement& b) {
    check_same_field(a.field(), b.field());
    if (a.field().is_prime_field()) {
        const std::uint64_t x = a.residue(), y = b.residue();
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    const mpq_class &x = a.rational(), &y = b.rational();
    const int by_abs = cmp(abs(x), abs(y));
    if (by_abs != 0) return by_abs;
    const int sx = sgn(x), sy = sgn(y);
    if (sx == sy) return 0;
    return sx < 0 ? -1 : 1;  // negative sorts first at equal magnitude
}

}  // namespace minreal
