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

#include <span>
#include <utility>
#include <vector>

#include "minreal/matrix.hpp"
#include "minreal/mcmillan.hpp"
#include "minreal/poly.hpp"
#include "minreal/ratfun.hpp"

namespace minreal {

/// Companion matrix of a monic polynomial: ones on the superdiagonal and
/// the negated coefficients in the last row; its characteristic polynomial
/// is p itself.
Matrix companion(const Poly& p);

/// The symmetric coefficient pairing M of a monic p (rows of shifted
/// coefficients, ones on the antidiagonal). Satisfies M C = C^T M and is
/// invertible; it converts between the two coefficient pairings used when
/// a realization is read off from expansion digits.
Matrix companion_symmetrizer(const Poly& p);

/// Jacobson block of p^k: k copies of the companion on the block diagonal,
/// a single corner one linking consecutive copies. Degree-one p gives the
/// usual Jordan block.
Matrix jacobson_block(const Poly& p, unsigned k);

/// State-space triple H (sI - F)^{-1} G, with F block-diagonal of Jacobson
/// blocks as listed in `blocks` (in order).
struct Realization {
    Field field;
    Matrix F;  // dim x dim
    Matrix G;  // dim x inputs
    Matrix H;  // outputs x dim

    std::vector<std::pair<Poly, unsigned>> blocks;

    std::size_t dim() const { return F.rows(); }
    std::size_t inputs() const { return G.cols(); }
    std::size_t outputs() const { return H.rows(); }

    static Realization empty(const Field& field, std::size_t outputs, std::size_t inputs);
};

/// Minimal realization of the strictly proper part of h (1/p^k) g^T from
/// the expansion digits of h and g in powers of p. Requires p monic
/// irreducible, k >= 1, and neither h nor g divisible by p (UsageError
/// naming the offending gcd otherwise). The state matrix is the Jacobson
/// block of p^k; the dimension is k * deg p.
Realization realize_rank1(const PolyVec& h, const PolyVec& g, const Poly& p, unsigned k,
                          std::uint64_t seed = default_factor_seed);

/// Realization of one prime component: Smith-McMillan split into rank-one
/// summands, one realize_rank1 each (indices with exponent zero vanish
/// under the strictly proper projection and are skipped), direct-summed.
Realization realize_prime_component(const PrimeComponent& component,
                                    std::uint64_t seed = default_factor_seed);

/// Block-diagonal direct sum; parts must agree on field and input/output
/// counts. An empty list yields the dimension-zero realization.
Realization direct_sum(const Field& field, std::size_t outputs, std::size_t inputs,
                       std::span<const Realization> parts);

/// Full pipeline: partial fractions, one realization per prime component,
/// direct sum. The result is minimal with the state matrix in Jacobson
/// normal form; its dimension equals the McMillan degree. UsageError on a
/// matrix that is not strictly proper (project with pi_minus first).
Realization realize_full(const RatMatrix& T, std::uint64_t seed = default_factor_seed);

}  // namespace minreal
