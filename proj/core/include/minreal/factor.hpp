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
#include <utility>
#include <vector>

#include "minreal/poly.hpp"

namespace minreal {

/// Seed of the pseudo-random source used by equal-degree splitting when the
/// caller does not provide one. Runs are reproducible for a fixed seed.
inline constexpr std::uint64_t default_factor_seed = 1;

/// unit * prod factors[i].first ^ factors[i].second equals the input.
/// Factors are monic, irreducible, pairwise distinct, and sorted by
/// poly_less for reproducible output.
struct Factorization {
    FieldElement unit;
    std::vector<std::pair<Poly, unsigned>> factors;

    Poly reassemble() const;
};

/// Complete factorization into monic irreducibles.
///
/// Over GF(p) this always succeeds (squarefree split, distinct-degree
/// split, then randomized equal-degree split driven by `seed`). Over the
/// rationals each squarefree part is first certified irreducible by a
/// prime below 1000 that keeps it squarefree; failing that, parts of
/// degree <= 8 are reconstructed from a single big-prime factorization by
/// subset recombination under a coefficient bound. Anything beyond raises
/// FactorRangeError rather than ever returning an uncertified answer.
Factorization poly_factor(const Poly& a, std::uint64_t seed = default_factor_seed);

bool is_irreducible(const Poly& a, std::uint64_t seed = default_factor_seed);

}  // namespace minreal
