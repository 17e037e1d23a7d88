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

#include "minreal/verify.hpp"

#include "minreal/polymat.hpp"

namespace minreal {

RatMatrix transfer_of(const Realization& r) {
    if (r.F.rows() != r.F.cols() || r.G.rows() != r.dim() || r.H.cols() != r.dim())
        throw UsageError("realization dimensions are inconsistent");
    const PolyMatrix resolvent_num = PolyMatrix::s_identity_minus(r.F);
    const Poly char_poly = polymat_det(resolvent_num);
    const PolyMatrix numerator =
        PolyMatrix::of_scalar(r.H) * polymat_adjugate(resolvent_num) * PolyMatrix::of_scalar(r.G);
    return rational_divide(numerator, char_poly);
}

MinimalityReport minimality(const Realization& r) {
    const std::size_t dim = r.dim();
    Matrix controllability = r.G;
    Matrix observability = r.H;
    Matrix reach = r.G;
    Matrix observe = r.H;
    for (std::size_t i = 1; i < dim; ++i) {
        reach = r.F * reach;
        controllability = hstack(controllability, reach);
        observe = observe * r.F;
        observability = vstack(observability, observe);
    }
    MinimalityReport report{};
    report.dim = dim;
    report.controllability_rank = dim == 0 ? 0 : controllability.rank();
    report.observability_rank = dim == 0 ? 0 : observability.rank();
    report.controllable = report.controllability_rank == dim;
    report.observable = report.observability_rank == dim;
    report.minimal = report.controllable && report.observable;
    return report;
}

std::size_t mcmillan_degree(const RatMatrix& T, std::uint64_t seed) {
    if (!T.is_strictly_proper()) throw UsageError("McMillan degree requires a strictly proper matrix");
    std::size_t degree = 0;
    for (const PrimeComponent& component : partial_fractions(T, seed)) {
        const SmithMcMillan sm = smith_mcmillan(component);
        for (unsigned k : sm.exponents)
            degree += static_cast<std::size_t>(k) * static_cast<std::size_t>(component.prime.degree());
    }
    return degree;
}

}  // namespace minreal
