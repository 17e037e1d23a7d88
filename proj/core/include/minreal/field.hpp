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

#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "minreal/errors.hpp"

namespace minreal {

/// Descriptor of a coefficient field: GF(p) with prime p < 2^31, or the
/// rationals with arbitrary-precision integers. Small value type, freely
/// copyable; two descriptors compare equal iff they denote the same field.
class Field {
  public:
    enum class Kind { prime_field, rationals };

    /// GF(p). Throws UsageError unless 2 <= p < 2^31 and p is prime.
    static Field gf(std::uint64_t p);
    static Field rationals() { return Field(Kind::rationals, 0); }

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::prime_field; }

    /// Prime modulus; UsageError over the rationals.
    std::uint64_t modulus() const;

    /// Header spelling used by the problem-file format: "gf 5" or "q".
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

  private:
    Field(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;
};

/// Throws UsageError when two values from different fields meet.
void check_same_field(const Field& a, const Field& b);

/// An exact scalar: a residue in [0, p) over GF(p), or a reduced fraction
/// with positive denominator over the rationals. Immutable in spirit; all
/// operations return fresh values and never mutate shared state.
class FieldElement {
  public:
    /// Integer image in the field (reduced mod p over GF(p)).
    FieldElement(const Field& field, long long value);

    static FieldElement zero(const Field& field) { return FieldElement(field, 0); }
    static FieldElement one(const Field& field) { return FieldElement(field, 1); }
    static FieldElement from_integer(const Field& field, const mpz_class& value);
    /// Over GF(p) maps a/b to a * b^{-1}; ArithmeticError if p divides b.
    static FieldElement from_rational(const Field& field, const mpq_class& value);

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    /// Canonical residue; UsageError over the rationals.
    std::uint64_t residue() const;
    /// Reduced fraction; UsageError over GF(p).
    const mpq_class& rational() const;

    FieldElement operator-() const;
    /// Multiplicative inverse; ArithmeticError on zero.
    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) {
        lhs *= rhs;
        return lhs;
    }
    friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) {
        lhs /= rhs;
        return lhs;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// "3" over GF(p); "a/b" or "a" over the rationals.
    std::string str() const;

  private:
    Field field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

/// Total order used only for deterministic sorting: residues numerically
/// over GF(p); over the rationals by absolute value, negative first on
/// ties. Returns <0, 0, >0.
int canonical_compare(const FieldElement& a, const FieldElement& b);

}  // namespace minreal
