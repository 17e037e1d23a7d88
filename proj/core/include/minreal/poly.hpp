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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "minreal/field.hpp"
#include "minreal/matrix.hpp"

namespace minreal {

/// Dense univariate polynomial in s over a fixed field. Coefficients are
/// stored ascending (index i holds the coefficient of s^i) with trailing
/// zeros stripped; the zero polynomial stores no coefficients.
class Poly {
  public:
    /// The zero polynomial.
    explicit Poly(const Field& field) : field_(field) {}
    Poly(const Field& field, std::vector<FieldElement> coeffs);

    static Poly constant(FieldElement c);
    /// Ascending coefficients from integers: {2, 1, 1} is s^2 + s + 2.
    static Poly from_ints(const Field& field, std::initializer_list<long long> ascending);
    static Poly variable(const Field& field) { return from_ints(field, {0, 1}); }
    static Poly monomial(FieldElement c, std::size_t exponent);

    const Field& field() const { return field_; }
    /// Degree, with -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Coefficient of s^i (zero beyond the degree).
    FieldElement coeff(std::size_t i) const;
    /// UsageError on the zero polynomial.
    FieldElement leading_coeff() const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Poly operator-(Poly lhs, const Poly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(const FieldElement& scalar, const Poly& p);

    Poly pow(unsigned e) const;
    Poly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    /// Scaled by the inverse leading coefficient; UsageError on zero.
    Poly monic() const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Human-readable descending form, e.g. "2*s^3+s+4". Matches the
    /// problem-file grammar whenever the coefficients are integers.
    std::string str() const;

  private:
    void normalize();

    Field field_;
    std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder with deg r < deg b; ArithmeticError when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

struct ExtGcd {
    Poly g;  // monic gcd
    Poly u;
    Poly v;  // g = u*a + v*b
};

/// Extended Euclid; UsageError when both inputs are zero.
ExtGcd poly_ext_gcd(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);
/// Monic least common multiple; zero if either input is zero.
Poly poly_lcm(const Poly& a, const Poly& b);

/// Deterministic total order: by degree, then ascending-power coefficient
/// comparison under canonical_compare. Used wherever output order matters.
bool poly_less(const Poly& a, const Poly& b);

/// Column vector of polynomials over one field.
using PolyVec = std::vector<Poly>;

/// Largest entry degree; -1 for an empty or all-zero vector.
int vec_degree(const PolyVec& v);

/// Expansion of a polynomial vector in powers of a monic base: digit i is
/// the vector coefficient of base^i and every digit entry keeps degree
/// strictly below deg base. Trailing zero digits are stripped.
struct PadicExpansion {
    Poly base;
    std::size_t width;  // entry count of the expanded vector
    std::vector<PolyVec> digits;

    /// Sum of digits[i] * base^i; the identity used by the tests.
    PolyVec reassemble() const;
};

/// UsageError when base is constant or not monic.
PadicExpansion padic_expand(const PolyVec& v, const Poly& base);

/// Rows hold the ascending coefficients of each entry, zero-padded to
/// width n; UsageError when an entry has degree >= n.
Matrix coeff_matrix(const PolyVec& digit, std::size_t n, const Field& field);

}  // namespace minreal
