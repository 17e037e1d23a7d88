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

#include <random>
#include <vector>

#include "minreal/factor.hpp"
#include "minreal/matrix.hpp"
#include "minreal/poly.hpp"
#include "minreal/polymat.hpp"
#include "minreal/ratfun.hpp"

namespace minreal::testing {

using Rng = std::mt19937_64;

inline FieldElement random_element(const Field& field, Rng& rng, long long q_range = 9) {
    if (field.is_prime_field())
        return FieldElement(field, static_cast<long long>(rng() % field.modulus()));
    const long long span = 2 * q_range + 1;
    const long long num = static_cast<long long>(rng() % span) - q_range;
    const long long den = 1 + static_cast<long long>(rng() % 3);
    return FieldElement::from_rational(field, mpq_class(static_cast<long>(num), static_cast<long>(den)));
}

inline Poly random_poly(const Field& field, int max_degree, Rng& rng) {
    if (max_degree < 0) return Poly(field);
    const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 2)) - 1;
    std::vector<FieldElement> coeffs;
    for (int i = 0; i <= deg; ++i) coeffs.push_back(random_element(field, rng));
    return Poly(field, std::move(coeffs));
}

inline Poly random_monic(const Field& field, int degree, Rng& rng) {
    std::vector<FieldElement> coeffs;
    for (int i = 0; i < degree; ++i) coeffs.push_back(random_element(field, rng));
    coeffs.push_back(FieldElement::one(field));
    return Poly(field, std::move(coeffs));
}

inline Poly random_irreducible(const Field& field, int degree, Rng& rng) {
    for (;;) {
        Poly p = random_monic(field, degree, rng);
        if (is_irreducible(p)) return p;
    }
}

inline Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng,
                            long long q_range = 3) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_element(field, rng, q_range);
    return m;
}

inline Matrix random_invertible(const Field& field, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(field, n, n, rng, 2);
        if (!m.det().is_zero()) return m;
    }
}

// Product of a few random elementary row/column operations.
inline PolyMatrix random_unimodular(const Field& field, std::size_t n, int ops, int max_degree, Rng& rng) {
    PolyMatrix u = PolyMatrix::identity(field, n);
    if (n < 2) return u;
    for (int step = 0; step < ops; ++step) {
        const std::size_t i = rng() % n;
        std::size_t j = rng() % n;
        while (j == i) j = rng() % n;
        const Poly q = random_poly(field, max_degree, rng);
        for (std::size_t c = 0; c < n; ++c) u.at(i, c) += q * u.at(j, c);
    }
    return u;
}

// Strictly proper matrix with a controlled denominator: numerators drawn
// below the degree of den.
inline RatMatrix random_strictly_proper(const Field& field, std::size_t rows, std::size_t cols,
                                        const Poly& den, Rng& rng) {
    RatMatrix T(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Poly num = random_poly(field, den.degree() - 1, rng);
            T.at(i, j) = RatFun(num, den);
        }
    return T;
}

// ------------------------------------------------------------- oracles ----

// Coefficients of s^{-1}, s^{-2}, ... in the expansion of a strictly
// proper entry; used by the Hankel-rank oracle.
inline std::vector<FieldElement> series_coefficients(const RatFun& f, std::size_t count) {
    std::vector<FieldElement> out;
    const Field& field = f.field();
    const Poly& den = f.den();
    const auto deg = static_cast<std::size_t>(den.degree());
    Poly rest = f.num();
    const Poly s = Poly::variable(field);
    for (std::size_t v = 0; v < count; ++v) {
        rest = s * rest;
        const FieldElement c = rest.coeff(deg);
        out.push_back(c);
        rest -= Poly::constant(c) * den;
    }
    return out;
}

// Rank of the block Hankel matrix of the first Markov parameters. For
// depth >= deg of the least common denominator this equals the dimension
// of a minimal realization.
inline std::size_t hankel_rank(const RatMatrix& T, std::size_t depth) {
    const Field& field = T.field();
    const std::size_t q = T.rows(), t = T.cols();
    if (depth == 0 || T.is_zero()) return 0;
    std::vector<Matrix> markov(2 * depth, Matrix(field, q, t));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            const auto series = series_coefficients(T.at(i, j), 2 * depth);
            for (std::size_t v = 0; v < 2 * depth; ++v) markov[v].at(i, j) = series[v];
        }
    Matrix hankel(field, q * depth, t * depth);
    for (std::size_t bi = 0; bi < depth; ++bi)
        for (std::size_t bj = 0; bj < depth; ++bj)
            for (std::size_t i = 0; i < q; ++i)
                for (std::size_t j = 0; j < t; ++j)
                    hankel.at(bi * q + i, bj * t + j) = markov[bi + bj].at(i, j);
    return hankel.rank();
}

// Kronecker product of rational matrices (test-side only).
inline RatMatrix rat_kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    return out;
}

// Upper-triangular Toeplitz matrix with entries 1/p, 1/p^2, ..., 1/p^k:
// the exact inverse of (p I_k - N_k).
inline RatMatrix toeplitz_resolvent(const Poly& p, std::size_t k) {
    RatMatrix out(p.field(), k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            out.at(i, j) = RatFun(Poly::from_ints(p.field(), {1}), p.pow(static_cast<unsigned>(j - i + 1)));
    return out;
}

inline RatMatrix rat_identity(const Field& field, std::size_t n) {
    RatMatrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = RatFun::one(field);
    return out;
}

}  // namespace minreal::testing
