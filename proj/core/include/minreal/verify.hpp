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

#include "minreal/realize.hpp"

namespace minreal {

/// Exact transfer matrix H (sI - F)^{-1} G, computed through the adjugate
/// and determinant of sI - F over K[s] and reduced entrywise.
RatMatrix transfer_of(const Realization& r);

struct MinimalityReport {
    std::size_t dim;
    std::size_t controllability_rank;
    std::size_t observability_rank;
    bool controllable;
    bool observable;
    bool minimal;
};

/// Ranks of the controllability and observability matrices; minimal iff
/// both reach the state dimension.
MinimalityReport minimality(const Realization& r);

/// Sum of deg(p) * k over the Smith-McMillan structure of every prime
/// component; the dimension of any minimal realization of T.
std::size_t mcmillan_degree(const RatMatrix& T, std::uint64_t seed = default_factor_seed);

}  // namespace minreal
