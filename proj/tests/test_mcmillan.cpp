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

#include <doctest.h>

#include <algorithm>

#include "gf5_fixtures.hpp"
#include "helpers.hpp"
#include "minreal/mcmillan.hpp"

using namespace minreal;
using minreal::testing::Gf5Example;
using minreal::testing::Rng;

namespace {

void check_invariants(const SmithMcMillan& sm, const PrimeComponent& input) {
    CHECK(is_unimodular(sm.U));
    CHECK(is_unimodular(sm.V));
    CHECK(to_rational(sm.U) * sm.sigma() * to_rational(sm.V.transpose()) == input.component);
    for (std::size_t i = 0; i < sm.rank; ++i) {
        CHECK(sm.numerators[i].is_monic());
        CHECK(poly_gcd(sm.numerators[i], sm.prime).is_one());
        if (i + 1 < sm.rank) {
            CHECK(sm.exponents[i] >= sm.exponents[i + 1]);
            CHECK(divides(sm.numerators[i], sm.numerators[i + 1]));
        }
    }
}

PrimeComponent random_component(const Field& field, Rng& rng) {
    const Poly prime = minreal::testing::random_irreducible(field, 1 + int(rng() % 2), rng);
    const unsigned level = 1 + unsigned(rng() % 2);
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    RatMatrix c(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const unsigned m = 1 + unsigned(rng() % level);
            const Poly den = prime.pow(m);
            c.at(i, j) = RatFun(minreal::testing::random_poly(field, den.degree() - 1, rng), den);
        }
    return {prime, c};
}

}  // namespace

TEST_CASE("golden component with exponent chain (2, 1)") {
    const Gf5Example ex;
    const SmithMcMillan sm = smith_mcmillan({ex.p1, ex.T_p1});
    REQUIRE(sm.rank == 2);
    CHECK(sm.numerators[0].is_one());
    CHECK(sm.numerators[1] == ex.a2);
    CHECK(sm.exponents[0] == 2);
    CHECK(sm.exponents[1] == 1);
    check_invariants(sm, {ex.p1, ex.T_p1});

    // The published transformers describe the same diagonal.
    RatMatrix sigma(ex.field, 2, 2);
    sigma.at(0, 0) = RatFun(Poly::from_ints(ex.field, {1}), ex.p1.pow(2));
    sigma.at(1, 1) = RatFun(ex.a2, ex.p1);
    CHECK(sm.sigma() == sigma);
    CHECK(to_rational(ex.U1) * sigma * to_rational(ex.V1.transpose()) == ex.T_p1);
}

TEST_CASE("golden rank-one component") {
    const Gf5Example ex;
    const SmithMcMillan sm = smith_mcmillan({ex.p2, ex.T_p2});
    REQUIRE(sm.rank == 1);
    CHECK(sm.numerators[0].is_one());
    CHECK(sm.exponents[0] == 1);
    check_invariants(sm, {ex.p2, ex.T_p2});
}

TEST_CASE("already diagonal component") {
    const Gf5Example ex;
    RatMatrix t(ex.field, 2, 2);
    t.at(0, 0) = RatFun(Poly::from_ints(ex.field, {1}), ex.p1);
    const SmithMcMillan sm = smith_mcmillan({ex.p1, t});
    REQUIRE(sm.rank == 1);
    CHECK(sm.numerators[0].is_one());
    CHECK(sm.exponents[0] == 1);
    CHECK(sm.sigma() == t);
}

TEST_CASE("mixed primes are rejected") {
    const Gf5Example ex;
    RatMatrix t(ex.field, 1, 2);
    t.at(0, 0) = RatFun(Poly::from_ints(ex.field, {1}), ex.p1);
    t.at(0, 1) = RatFun(Poly::from_ints(ex.field, {1}), ex.p2);
    CHECK_THROWS_AS(smith_mcmillan({ex.p1, t}), UsageError);
}

TEST_CASE("invariants on random components") {
    Rng rng(71);
    for (const Field& field : {Field::gf(2), Field::gf(5), Field::rationals()}) {
        for (int trial = 0; trial < 12; ++trial) {
            const PrimeComponent c = random_component(field, rng);
            check_invariants(smith_mcmillan(c), c);
        }
    }
}

TEST_CASE("diagonal is canonical under unimodular moves") {
    // The diagonal depends only on the unimodular equivalence class of the
    // cleared-denominator matrix; a different elimination path must find
    // the same invariant factors.
    Rng rng(73);
    const Field f5 = Field::gf(5);
    for (int trial = 0; trial < 10; ++trial) {
        const PrimeComponent c = random_component(f5, rng);
        const SmithMcMillan sm = smith_mcmillan(c);

        const PolyMatrix l = minreal::testing::random_unimodular(f5, c.component.rows(), 3, 1, rng);
        const PolyMatrix r = minreal::testing::random_unimodular(f5, c.component.cols(), 3, 1, rng);
        const RatMatrix moved = to_rational(l) * c.component * to_rational(r);
        if (!moved.is_strictly_proper()) continue;  // the move may leave the valid input class
        const SmithMcMillan sm2 = smith_mcmillan({c.prime, moved});
        REQUIRE(sm2.rank == sm.rank);
        for (std::size_t i = 0; i < sm.rank; ++i) {
            CHECK(sm2.numerators[i] == sm.numerators[i]);
            CHECK(sm2.exponents[i] == sm.exponents[i]);
        }
    }
}

TEST_CASE("structural degree matches the hankel-rank oracle") {
    Rng rng(79);
    const Field f5 = Field::gf(5);
    for (int trial = 0; trial < 20; ++trial) {
        const PrimeComponent c = random_component(f5, rng);
        const SmithMcMillan sm = smith_mcmillan(c);
        std::size_t structural = 0;
        for (unsigned k : sm.exponents) structural += k * static_cast<std::size_t>(c.prime.degree());
        const Poly lcm = lcm_denominator(c.component);
        const std::size_t depth = static_cast<std::size_t>(std::max(lcm.degree(), 1));
        CHECK(structural == minreal::testing::hankel_rank(c.component, depth));
    }
}
