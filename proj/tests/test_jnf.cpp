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
#include "minreal/jnf.hpp"

using namespace minreal;
using minreal::testing::Gf5Example;
using minreal::testing::Rng;

namespace {

// A = S0 diag(blocks) S0^{-1} from a given elementary divisor list.
Matrix similarity_scramble(const Field& field, const ElementaryDivisors& divisors, Rng& rng,
                           Matrix* j_out = nullptr) {
    std::vector<Realization> parts;
    std::size_t dim = 0;
    for (const auto& [p, k] : divisors) dim += static_cast<std::size_t>(p.degree()) * k;
    Matrix j(field, dim, dim);
    std::size_t at = 0;
    for (const auto& [p, k] : divisors) {
        const Matrix block = jacobson_block(p, k);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c) j.at(at + r, at + c) = block.at(r, c);
        at += block.rows();
    }
    if (j_out) *j_out = j;
    const Matrix s0 = minreal::testing::random_invertible(field, dim, rng);
    return s0 * j * s0.inverse();
}

}  // namespace

TEST_CASE("elementary divisors of structured matrices") {
    const Gf5Example ex;
    SUBCASE("single jacobson block") {
        const auto divisors = elementary_divisors(jacobson_block(ex.p1, 2));
        REQUIRE(divisors.size() == 1);
        CHECK(divisors[0] == std::pair{ex.p1, 2u});
    }
    SUBCASE("repeated scalar blocks") {
        const Field q = Field::rationals();
        Matrix a(q, 2, 2);
        a.at(0, 0) = FieldElement(q, 3);
        a.at(1, 1) = FieldElement(q, 3);
        const auto divisors = elementary_divisors(a);
        const Poly linear = Poly::from_ints(q, {-3, 1});
        REQUIRE(divisors.size() == 2);
        CHECK(divisors[0] == std::pair{linear, 1u});
        CHECK(divisors[1] == std::pair{linear, 1u});
    }
    SUBCASE("the nine-dimensional golden state matrix") {
        const Gf5Example e;
        const auto divisors = elementary_divisors(e.F9);
        REQUIRE(divisors.size() == 3);
        CHECK(divisors[0] == std::pair{e.p1, 1u});  // ascending exponents within a prime
        CHECK(divisors[1] == std::pair{e.p1, 2u});
        CHECK(divisors[2] == std::pair{e.p2, 1u});
    }
    CHECK_THROWS_AS(elementary_divisors(Matrix(ex.field, 2, 3)), UsageError);
}

TEST_CASE("jacobson normal form fixtures") {
    const Gf5Example ex;
    SUBCASE("a companion matrix is already in form") {
        const Matrix a = companion(ex.p2);
        const JacobsonForm jf = jacobson_normal_form(a);
        CHECK(jf.J == a);
        CHECK(jf.S * jf.J * jf.S.inverse() == a);
        REQUIRE(jf.divisors.size() == 1);
        CHECK(jf.divisors[0] == std::pair{ex.p2, 1u});
    }
    SUBCASE("rational diagonal matrix") {
        const Field q = Field::rationals();
        Matrix a(q, 2, 2);
        a.at(0, 0) = FieldElement(q, 2);
        a.at(1, 1) = FieldElement(q, 3);
        const JacobsonForm jf = jacobson_normal_form(a);
        CHECK(jf.J == a);  // diag(2, 3) in canonical order
        REQUIRE(jf.divisors.size() == 2);
        CHECK(jf.divisors[0] == std::pair{Poly::from_ints(q, {-2, 1}), 1u});
        CHECK(jf.divisors[1] == std::pair{Poly::from_ints(q, {-3, 1}), 1u});
    }
    SUBCASE("scrambled single block is recovered") {
        Rng rng(131);
        Matrix expected_j(ex.field, 0, 0);
        const Matrix a =
            similarity_scramble(ex.field, {{ex.p1, 2u}}, rng, &expected_j);
        const JacobsonForm jf = jacobson_normal_form(a);
        CHECK(jf.J == expected_j);
        CHECK(jf.S * jf.J * jf.S.inverse() == a);
    }
}

TEST_CASE("normal form on random scrambles") {
    Rng rng(137);
    const Field f5 = Field::gf(5);
    const Field q = Field::rationals();

    const auto q_prime_pool = [&]() {
        std::vector<Poly> pool;
        pool.push_back(Poly::from_ints(q, {-2, 1}));    // s-2
        pool.push_back(Poly::from_ints(q, {1, 1}));     // s+1
        pool.push_back(Poly::from_ints(q, {1, 0, 1}));  // s^2+1
        pool.push_back(Poly::from_ints(q, {2, 0, 1}));  // s^2+2
        pool.push_back(Poly::from_ints(q, {1, 1, 1}));  // s^2+s+1
        return pool;
    }();

    for (int trial = 0; trial < 12; ++trial) {
        for (const Field& field : {f5, q}) {
            // Draw elementary divisors with total degree <= 6.
            ElementaryDivisors divisors;
            std::size_t total = 0;
            while (divisors.size() < 2) {
                Poly p = field.is_prime_field()
                             ? minreal::testing::random_irreducible(field, 1 + int(rng() % 2), rng)
                             : q_prime_pool[rng() % q_prime_pool.size()];
                const unsigned k = 1 + unsigned(rng() % 2);
                if (total + p.degree() * k > 6) break;
                total += p.degree() * k;
                divisors.emplace_back(std::move(p), k);
            }
            if (divisors.empty()) continue;

            const Matrix a = similarity_scramble(field, divisors, rng);
            const JacobsonForm jf = jacobson_normal_form(a);

            // Multiset comparison via the canonical sort.
            ElementaryDivisors expected = divisors;
            std::sort(expected.begin(), expected.end(), [](const auto& x, const auto& y) {
                if (x.first != y.first) return poly_less(x.first, y.first);
                return x.second < y.second;
            });
            CHECK(jf.divisors == expected);
            CHECK(jf.S * jf.J * jf.S.inverse() == a);
            CHECK(!jf.S.det().is_zero());
            // Two independent routes agree.
            CHECK(jf.divisors == elementary_divisors(a));
            // Similarity invariant: the pencils have equal Smith forms.
            CHECK(smith_form(PolyMatrix::s_identity_minus(a)).S ==
                  smith_form(PolyMatrix::s_identity_minus(jf.J)).S);
        }
    }
}
