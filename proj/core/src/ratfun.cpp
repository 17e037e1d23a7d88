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

#include "minreal/ratfun.hpp"

#include <utility>

namespace minreal {

RatFun::RatFun(const Field& field) : num_(field), den_(Poly::from_ints(field, {1})) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    check_same_field(num_.field(), den_.field());
    if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::from_ints(num_.field(), {1});
        return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const FieldElement scale = den_.leading_coeff().inverse();
    num_ = scale * num_;
    den_ = scale * den_;
}

RatFun RatFun::of_poly(Poly p) {
    RatFun out(p.field());
    out.num_ = std::move(p);
    return out;
}

RatFun RatFun::one(const Field& field) { return of_poly(Poly::from_ints(field, {1})); }

RatFun RatFun::operator-() const {
    RatFun out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw ArithmeticError("division by the zero rational function");
    return RatFun(den_, num_);
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
    *this = RatFun(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& rhs) {
    *this = RatFun(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

RatFun& RatFun::operator*=(const RatFun& rhs) {
    *this = RatFun(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& rhs) { return *this *= rhs.inverse(); }

bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

namespace {

// Smallest positive integer clearing every coefficient denominator.
mpz_class coefficient_lcm(const Poly& p) {
    mpz_class scale = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.rational().get_den().get_mpz_t());
    return scale;
}

}  // namespace

std::string RatFun::str() const {
    if (is_zero()) return "0";
    Poly num = num_, den = den_;
    if (!field().is_prime_field()) {
        mpz_class scale;
        mpz_lcm(scale.get_mpz_t(), coefficient_lcm(num_).get_mpz_t(), coefficient_lcm(den_).get_mpz_t());
        const FieldElement s = FieldElement::from_integer(field(), scale);
        num = s * num;
        den = s * den;
    }
    if (den.is_one()) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

RatFun pi_minus(const RatFun& f) {
    if (f.is_strictly_proper()) return f;
    return RatFun(f.num() % f.den(), f.den());
}

Poly polynomial_part(const RatFun& f) { return f.num() / f.den(); }

RatMatrix::RatMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, RatFun(field)) {}

RatFun& RatMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
    return entries_[i * cols_ + j];
}

const RatFun& RatMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
    return entries_[i * cols_ + j];
}

bool RatMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool RatMatrix::is_strictly_proper() const {
    for (const auto& e : entries_)
        if (!e.is_strictly_proper()) return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs) {
    check_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix shape mismatch in addition");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& rhs) {
    check_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix shape mismatch in subtraction");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
    check_same_field(lhs.field_, rhs.field_);
    if (lhs.cols_ != rhs.rows_) throw UsageError("matrix shape mismatch in product");
    RatMatrix out(lhs.field_, lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const RatFun& a = lhs.at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

RatMatrix operator*(const RatFun& scalar, const RatMatrix& m) {
    RatMatrix out = m;
    for (auto& e : out.entries_) e *= scalar;
    return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RatMatrix pi_minus(const RatMatrix& m) {
    RatMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = pi_minus(m.at(i, j));
    return out;
}

Poly lcm_denominator(const RatMatrix& m) {
    Poly lcm = Poly::from_ints(m.field(), {1});
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) lcm = poly_lcm(lcm, m.at(i, j).den());
    return lcm;
}

std::vector<PrimeComponent> partial_fractions(const RatMatrix& T, std::uint64_t seed) {
    if (!T.is_strictly_proper()) throw UsageError("partial fractions require a strictly proper matrix");
    std::vector<PrimeComponent> out;
    if (T.is_zero()) return out;

    const Poly d = lcm_denominator(T);
    const Factorization fac = poly_factor(d, seed);
    for (const auto& [prime, mult] : fac.factors) {
        (void)mult;
        out.push_back({prime, RatMatrix(T.field(), T.rows(), T.cols())});
    }

    for (std::size_t i = 0; i < T.rows(); ++i) {
        for (std::size_t j = 0; j < T.cols(); ++j) {
            const RatFun& entry = T.at(i, j);
            if (entry.is_zero()) continue;
            // Exponents of each prime in this entry's denominator.
            Poly rest = entry.den();
            std::vector<std::pair<std::size_t, Poly>> prime_powers;  // (component index, p^m)
            for (std::size_t c = 0; c < out.size(); ++c) {
                const Poly& p = out[c].prime;
                Poly power = Poly::from_ints(T.field(), {1});
                while (divides(p, rest)) {
                    rest = rest / p;
                    power = power * p;
                }
                if (power.degree() > 0) prime_powers.emplace_back(c, std::move(power));
            }
            if (!rest.is_one())
                throw InternalError("entry denominator does not divide the factored common denominator");
            // Bezout split against the coprime cofactor for each prime power.
            for (const auto& [c, q] : prime_powers) {
                const Poly cofactor = entry.den() / q;
                const ExtGcd e = poly_ext_gcd(cofactor, q);
                if (!e.g.is_one()) throw InternalError("prime-power cofactors are not coprime");
                // entry = num/(q*cofactor); num * u / q + num * v / cofactor with u from
                // u*cofactor + v*q = 1, so the q-part numerator is num*u mod q.
                const Poly numerator = (entry.num() * e.u) % q;
                out[c].component.at(i, j) += RatFun(numerator, q);
            }
        }
    }

    RatMatrix sum(T.field(), T.rows(), T.cols());
    for (const auto& pc : out) {
        if (!pc.component.is_strictly_proper())
            throw InternalError("partial fraction component is not strictly proper");
        sum += pc.component;
    }
    if (!(sum == T)) throw InternalError("partial fraction components do not sum to the input");
    return out;
}

}  // namespace minreal
