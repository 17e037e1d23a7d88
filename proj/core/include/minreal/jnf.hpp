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

#include "minreal/matrix.hpp"
#include "minreal/poly.hpp"
#include "minreal/realize.hpp"

namespace minreal {

/// (prime, exponent) pairs in canonical order: primes sorted by poly_less,
/// exponents ascending within a prime; duplicates kept (multiset).
using ElementaryDivisors = std::vector<std::pair<Poly, unsigned>>;

/// Prime-power factors of the invariant factors of sI - A.
ElementaryDivisors elementary_divisors(const Matrix& a, std::uint64_t seed = default_factor_seed);

/// A = S J S^{-1} with J block-diagonal of Jacobson blocks, one per
/// elementary divisor, in the canonical order.
struct JacobsonForm {
    Matrix J;
    Matrix S;
    ElementaryDivisors divisors;
};

/// Jacobson normal form through the resolvent: realizing (sI - A)^{-1}
/// yields a triple with H G = I, so A = H F H^{-1}; blocks are then
/// permuted into the canonical order. The result is cross-checked against
/// the Smith-form route (InternalError on disagreement: a bug, not bad
/// input).
JacobsonForm jacobson_normal_form(const Matrix& a, std::uint64_t seed = default_factor_seed);

}  // namespace minreal
