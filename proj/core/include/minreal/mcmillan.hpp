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

#include <vector>

#include "minreal/polymat.hpp"
#include "minreal/ratfun.hpp"

namespace minreal {

/// T = U * Sigma * V^T for a prime component T, with U, V unimodular and
/// Sigma = diag(a_1/p^{k_1}, ..., a_r/p^{k_r}, 0, ...). The numerators are
/// monic, coprime to p, and form a divisibility chain a_1 | ... | a_r; the
/// exponents are nonincreasing. The diagonal is canonical; U and V are
/// fixed only by the deterministic elimination.
struct SmithMcMillan {
    PolyMatrix U;  // outputs x outputs
    PolyMatrix V;  // inputs x inputs
    Poly prime;
    std::vector<Poly> numerators;
    std::vector<unsigned> exponents;
    std::size_t rank;

    std::size_t outputs() const { return U.rows(); }
    std::size_t inputs() const { return V.rows(); }

    /// Materialized Sigma, shaped outputs x inputs.
    RatMatrix sigma() const;
};

/// Smith-McMillan form of a prime component: write T = N / p^l with N a
/// polynomial matrix, take the Smith form of N, divide by p^l and reduce.
/// UsageError when an entry denominator is not a power of the prime.
SmithMcMillan smith_mcmillan(const PrimeComponent& component);

}  // namespace minreal
