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
#include <vector>

#include "minreal/factor.hpp"
#include "minreal/poly.hpp"

namespace minreal {

/// Reduced fraction of two polynomials with a monic denominator; zero is
/// represented as 0/1. Construction reduces, every operation preserves the
/// invariant.
class RatFun {
  public:
    explicit RatFun(const Field& field);  // zero
    RatFun(Poly num, Poly den);           // reduces; ArithmeticError when den = 0
    static RatFun of_poly(Poly p);
    static RatFun one(const Field& field);

    const Field& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_strictly_proper() const { return num_.degree() < den_.degree(); }

    RatFun operator-() const;
    RatFun inverse() const;
    RatFun& operator+=(const RatFun& rhs);
    RatFun& operator-=(const RatFun& rhs);
    RatFun& operator*=(const RatFun& rhs);
    RatFun& operator/=(const RatFun& rhs);
    friend RatFun operator+(RatFun lhs, const RatFun& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend RatFun operator-(RatFun lhs, const RatFun& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend RatFun operator*(RatFun lhs, const RatFun& rhs) {
        lhs *= rhs;
        return lhs;
    }
    friend RatFun operator/(RatFun lhs, const RatFun& rhs) {
        lhs /= rhs;
        return lhs;
    }

    friend bool operator==(const RatFun& a, const RatFun& b);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// Grammar-compatible text. Over the rationals both sides are scaled by
    /// one integer so that all printed coefficients are integers.
    std::string str() const;

  private:
    Poly num_;
    Poly den_;
};

/// Strictly proper part of f; f minus the result is a polynomial.
RatFun pi_minus(const RatFun& f);
/// The discarded polynomial part.
Poly polynomial_part(const RatFun& f);

/// Rectangular matrix of rational functions, row-major.
class RatMatrix {
  public:
    RatMatrix(const Field& field, std::size_t rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RatFun& at(std::size_t i, std::size_t j);
    const RatFun& at(std::size_t i, std::size_t j) const;

    bool is_zero() const;
    bool is_strictly_proper() const;

    RatMatrix transpose() const;

    RatMatrix& operator+=(const RatMatrix& rhs);
    RatMatrix& operator-=(const RatMatrix& rhs);
    friend RatMatrix operator+(RatMatrix lhs, const RatMatrix& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend RatMatrix operator-(RatMatrix lhs, const RatMatrix& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
    friend RatMatrix operator*(const RatFun& scalar, const RatMatrix& m);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RatFun> entries_;
};

/// Entrywise strictly proper part.
RatMatrix pi_minus(const RatMatrix& m);

/// Monic least common denominator of all entries; 1 for a zero matrix.
Poly lcm_denominator(const RatMatrix& m);

/// One summand of the prime-wise split: every entry is strictly proper
/// with a power of `prime` as denominator.
struct PrimeComponent {
    Poly prime;
    RatMatrix component;
};

/// Splits a strictly proper matrix into components per distinct irreducible
/// factor of the least common denominator; the components sum back to the
/// input exactly and follow the deterministic factor order. UsageError on a
/// matrix that is not strictly proper.
std::vector<PrimeComponent> partial_fractions(const RatMatrix& T,
                                              std::uint64_t seed = default_factor_seed);

}  // namespace minreal
