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

#include "helpers.hpp"
#include "minreal/field.hpp"

using namespace minreal;
using minreal::testing::Rng;
using minreal::testing::random_element;

TEST_CASE("gf(5) arithmetic") {
    const Field f5 = Field::gf(5);
    CHECK(FieldElement(f5, 3) + FieldElement(f5, 4) == FieldElement(f5, 2));
    CHECK(FieldElement(f5, 3) / FieldElement(f5, 2) == FieldElement(f5, 4));
    CHECK(FieldElement(f5, 2).inverse() == FieldElement(f5, 3));
    CHECK(FieldElement(f5, 4).inverse() == FieldElement(f5, 4));
    CHECK(FieldElement(f5, -1) == FieldElement(f5, 4));
    CHECK(FieldElement(f5, 7).residue() == 2);
}

TEST_CASE("rational arithmetic") {
    const Field q = Field::rationals();
    const auto frac = [&](long n, long d) {
        return FieldElement::from_rational(q, mpq_class(n, d));
    };
    CHECK(frac(2, 3) * frac(3, 4) == frac(1, 2));
    CHECK(frac(7, 3).inverse() == frac(3, 7));
    CHECK(frac(1, 2) + frac(1, 3) == frac(5, 6));
    CHECK(frac(4, 8).str() == "1/2");
    CHECK(frac(-4, 8).rational().get_den() == 2);  // positive denominator
}

TEST_CASE("field construction rejects bad moduli") {
    CHECK_THROWS_AS(Field::gf(6), UsageError);
    CHECK_THROWS_AS(Field::gf(1), UsageError);
    CHECK_THROWS_AS(Field::gf(std::uint64_t(1) << 31), UsageError);
    CHECK_NOTHROW(Field::gf(2147483647));  // largest prime below 2^31
}

TEST_CASE("division by zero and field mismatch") {
    const Field f5 = Field::gf(5);
    const Field f7 = Field::gf(7);
    CHECK_THROWS_AS(FieldElement(f5, 1) / FieldElement(f5, 0), ArithmeticError);
    CHECK_THROWS_AS(FieldElement::zero(f5).inverse(), ArithmeticError);
    CHECK_THROWS_AS(FieldElement(f5, 1) + FieldElement(f7, 1), UsageError);
    CHECK_THROWS_AS(FieldElement::from_rational(f5, mpq_class(1, 5)), ArithmeticError);
}

TEST_CASE("field axioms on random samples") {
    Rng rng(7);
    for (const Field& field : {Field::gf(2), Field::gf(5), Field::gf(101), Field::rationals()}) {
        for (int trial = 0; trial < 200; ++trial) {
            const FieldElement a = random_element(field, rng);
            const FieldElement b = random_element(field, rng);
            const FieldElement c = random_element(field, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            if (field.is_prime_field()) {
                CHECK(a.residue() < field.modulus());
            } else {
                const mpq_class& v = a.rational();
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
                CHECK((g == 1 || sgn(v) == 0));
                CHECK(v.get_den() > 0);
            }
        }
    }
}

TEST_CASE("canonical ordering is total and deterministic") {
    const Field q = Field::rationals();
    const auto frac = [&](long n, long d) {
        return FieldElement::from_rational(q, mpq_class(n, d));
    };
    CHECK(canonical_compare(frac(2, 1), frac(3, 1)) < 0);
    CHECK(canonical_compare(frac(-2, 1), frac(-3, 1)) < 0);  // smaller magnitude first
    CHECK(canonical_compare(frac(-2, 1), frac(2, 1)) < 0);   // negative first on ties
    CHECK(canonical_compare(frac(1, 2), frac(1, 2)) == 0);
    const Field f5 = Field::gf(5);
    CHECK(canonical_compare(FieldElement(f5, 1), FieldElement(f5, 4)) < 0);
}
