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

#include "minreal/mcmillan.hpp"

namespace minreal {

namespace {

// Exponent m with den = p^m; UsageError when den is not a power of p.
unsigned prime_power_exponent(const Poly& den, const Poly& prime) {
    Poly rest = den;
    unsigned m = 0;
    while (!rest.is_one()) {
        auto [q, r] = poly_divmod(rest, prime);
        if (!r.is_zero())
            throw UsageError("component entry denominator is not a power of the component prime");
        rest = std::move(q);
        ++m;
    }
    return m;
}

}  // namespace

RatMatrix SmithMcMillan::sigma() const {
    RatMatrix out(prime.field(), outputs(), inputs());
    for (std::size_t i = 0; i < rank; ++i)
        out.at(i, i) = RatFun(numerators[i], prime.pow(exponents[i]));
    return out;
}

SmithMcMillan smith_mcmillan(const PrimeComponent& component) {
    const Poly& p = component.prime;
    const RatMatrix& T = component.component;
    if (p.degree() < 1 || !p.is_monic()) throw UsageError("component prime must be monic of degree >= 1");
    check_same_field(p.field(), T.field());
    if (!T.is_strictly_proper()) throw UsageError("prime component must be strictly proper");

    const std::size_t q = T.rows(), t = T.cols();
    unsigned level = 0;
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            const unsigned m = prime_power_exponent(T.at(i, j).den(), p);
            if (m > level) level = m;
        }

    // N = p^level * T is polynomial.
    PolyMatrix N(T.field(), q, t);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            const RatFun& e = T.at(i, j);
            const unsigned m = prime_power_exponent(e.den(), p);
            N.at(i, j) = e.num() * p.pow(level - m);
        }

    const SmithDecomposition sd = smith_form(N);

    SmithMcMillan out{unimodular_inverse(sd.U),
                      unimodular_inverse(sd.V).transpose(),
                      p,
                      {},
                      {},
                      sd.rank};
    for (std::size_t i = 0; i < sd.rank; ++i) {
        Poly a = sd.S.at(i, i);
        unsigned ord = 0;
        for (;;) {
            auto [quo, rem] = poly_divmod(a, p);
            if (!rem.is_zero() || ord == level) break;
            a = std::move(quo);
            ++ord;
        }
        if (divides(p, a))
            throw InternalError("Smith-McMillan numerator shares a factor with the prime");
        out.numerators.push_back(std::move(a));
        out.exponents.push_back(level - ord);
    }

    for (std::size_t i = 0; i + 1 < out.rank; ++i) {
        if (out.exponents[i] < out.exponents[i + 1])
            throw InternalError("Smith-McMillan exponents are not nonincreasing");
        if (!divides(out.numerators[i], out.numerators[i + 1]))
            throw InternalError("Smith-McMillan numerators break the divisibility chain");
    }

    // Reconstruction guard: U * Sigma * V^T must reproduce the component.
    if (!(to_rational(out.U) * out.sigma() * to_rational(out.V.transpose()) == T))
        throw InternalError("Smith-McMillan decomposition failed to reconstruct its input");
    return out;
}

}  // namespace minreal
