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

#include "gf5_fixtures.hpp"
#include "helpers.hpp"
#include "minreal/ratfun.hpp"

using namespace minreal;
using minreal::testing::Gf5Example;
using minreal::testing::Rng;

TEST_CASE("reduction invariants") {
    const Field f5 = Field::gf(5);
    const Poly p1 = Poly::from_ints(f5, {2, 1, 1});
    // s/(s) reduces to 1.
    const RatFun one(Poly::variable(f5), Poly::variable(f5));
    CHECK(one == RatFun::one(f5));
    CHECK(one.is_polynomial());
    // Non-monic denominators are normalized.
    const RatFun f(Poly::from_ints(f5, {1}), Poly::from_ints(f5, {0, 2}));
    CHECK(f.den() == Poly::variable(f5));
    CHECK(f.num() == Poly::from_ints(f5, {3}));
    CHECK_THROWS_AS(RatFun(p1, Poly(f5)), ArithmeticError);
}

TEST_CASE("strictly proper projection") {
    const Gf5Example ex;
    // a2/p1 projects to 3/p1.
    const RatFun f(ex.a2, ex.p1);
    const RatFun projected = pi_minus(f);
    CHECK(projected == RatFun(Poly::from_ints(ex.field, {3}), ex.p1));
    CHECK((f - projected).is_polynomial());

    // The projection fixes strictly proper inputs and kills polynomials.
    CHECK(pi_minus(projected) == projected);
    CHECK(pi_minus(RatFun::of_poly(ex.a2)).is_zero());
}

TEST_CASE("projection is linear and idempotent on random samples") {
    Rng rng(41);
    for (const Field& field : {Field::gf(5), Field::rationals()}) {
        for (int trial = 0; trial < 60; ++trial) {
            Poly d1 = minreal::testing::random_monic(field, 1 + int(rng() % 3), rng);
            Poly d2 = minreal::testing::random_monic(field, 1 + int(rng() % 3), rng);
            const RatFun f(minreal::testing::random_poly(field, 5, rng), d1);
            const RatFun g(minreal::testing::random_poly(field, 5, rng), d2);
            const FieldElement alpha = minreal::testing::random_element(field, rng);
            const RatFun scaled = RatFun::of_poly(Poly::constant(alpha)) * f;
            CHECK(pi_minus(scaled + g) == RatFun::of_poly(Poly::constant(alpha)) * pi_minus(f) + pi_minus(g));
            CHECK(pi_minus(pi_minus(f)) == pi_minus(f));
            CHECK((f - pi_minus(f)).is_polynomial());
            CHECK(pi_minus(f).is_strictly_proper());
            CHECK(RatFun::of_poly(polynomial_part(f)) + pi_minus(f) == f);
        }
    }
}

TEST_CASE("entrywise projection of a matrix") {
    const Gf5Example ex;
    // W = h (1/p1^2) g^T; the oracle is an entrywise division remainder.
    const Poly den = ex.p1.pow(2);
    RatMatrix w(ex.field, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) w.at(i, j) = RatFun(ex.h21[i] * ex.g21[j], den);
    const RatMatrix projected = pi_minus(w);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const Poly expected = (ex.h21[i] * ex.g21[j]) % den;
            CHECK(projected.at(i, j) == RatFun(expected, den));
        }
    CHECK(pi_minus(projected) == projected);

    // A matrix of polynomials projects to zero.
    RatMatrix polys(ex.field, 2, 2);
    polys.at(0, 1) = RatFun::of_poly(ex.a2);
    CHECK(pi_minus(polys).is_zero());
}

TEST_CASE("partial fractions of the golden matrix") {
    const Gf5Example ex;
    const auto components = partial_fractions(ex.T);
    REQUIRE(components.size() == 2);
    CHECK(components[0].prime == ex.p1);
    CHECK(components[0].component == ex.T_p1);
    CHECK(components[1].prime == ex.p2);
    CHECK(components[1].component == ex.T_p2);
    CHECK(components[0].component + components[1].component == ex.T);
}

TEST_CASE("partial fractions edge cases") {
    const Gf5Example ex;
    SUBCASE("single prime power returns the matrix itself") {
        const auto components = partial_fractions(ex.T_p2);
        REQUIRE(components.size() == 1);
        CHECK(components[0].prime == ex.p2);
        CHECK(components[0].component == ex.T_p2);
    }
    SUBCASE("zero matrix gives no components") {
        CHECK(partial_fractions(RatMatrix(ex.field, 2, 3)).empty());
    }
    SUBCASE("rejects matrices that are not strictly proper") {
        RatMatrix bad(ex.field, 1, 1);
        bad.at(0, 0) = RatFun(ex.a2, ex.p1);
        CHECK_THROWS_AS(partial_fractions(bad), UsageError);
    }
}

TEST_CASE("partial fractions on random strictly proper matrices") {
    Rng rng(43);
    const Field f5 = Field::gf(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly a = minreal::testing::random_irreducible(f5, 1 + int(rng() % 2), rng);
        Poly b = minreal::testing::random_irreducible(f5, 1 + int(rng() % 2), rng);
        while (b == a) b = minreal::testing::random_irreducible(f5, 1 + int(rng() % 2), rng);
        const Poly den = a.pow(1 + unsigned(rng() % 2)) * b;
        const RatMatrix T = minreal::testing::random_strictly_proper(f5, 2, 2, den, rng);
        const auto components = partial_fractions(T);
        RatMatrix sum(f5, 2, 2);
        for (const auto& c : components) {
            CHECK(c.component.is_strictly_proper());
            CHECK(is_irreducible(c.prime));
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    Poly rest = c.component.at(i, j).den();
                    while (divides(c.prime, rest)) rest = rest / c.prime;
                    CHECK(rest.is_one());
                }
            sum += c.component;
        }
        CHECK(sum == T);
        // Deterministic component order.
        for (std::size_t i = 0; i + 1 < components.size(); ++i)
            CHECK(poly_less(components[i].prime, components[i + 1].prime));
    }
}

TEST_CASE("least common denominator") {
    const Gf5Example ex;
    CHECK(lcm_denominator(ex.T) == ex.den);
    CHECK(lcm_denominator(RatMatrix(ex.field, 2, 2)).is_one());
}
