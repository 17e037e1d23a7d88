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

#include "minreal/jnf.hpp"

#include <algorithm>
#include <numeric>

#include "minreal/factor.hpp"
#include "minreal/polymat.hpp"

namespace minreal {

namespace {

bool divisor_less(const std::pair<Poly, unsigned>& a, const std::pair<Poly, unsigned>& b) {
    if (a.first != b.first) return poly_less(a.first, b.first);
    return a.second < b.second;
}

}  // namespace

ElementaryDivisors elementary_divisors(const Matrix& a, std::uint64_t seed) {
    if (!a.is_square()) throw UsageError("elementary divisors require a square matrix");
    const SmithDecomposition sd = smith_form(PolyMatrix::s_identity_minus(a));
    if (sd.rank != a.rows()) throw InternalError("sI - A must have full rank over K[s]");
    ElementaryDivisors out;
    std::size_t total = 0;
    for (const Poly& factor : sd.invariant_factors()) {
        if (factor.degree() == 0) continue;
        for (const auto& [prime, mult] : poly_factor(factor, seed).factors) {
            out.emplace_back(prime, mult);
            total += static_cast<std::size_t>(prime.degree()) * mult;
        }
    }
    if (total != a.rows()) throw InternalError("elementary divisor degrees do not sum to the dimension");
    std::sort(out.begin(), out.end(), divisor_less);
    return out;
}

JacobsonForm jacobson_normal_form(const Matrix& a, std::uint64_t seed) {
    if (!a.is_square()) throw UsageError("Jacobson normal form requires a square matrix");
    const Field& field = a.field();
    const std::size_t dim = a.rows();

    // Exact resolvent (sI - A)^{-1} as a strictly proper rational matrix.
    const PolyMatrix pencil = PolyMatrix::s_identity_minus(a);
    const RatMatrix resolvent = rational_divide(polymat_adjugate(pencil), polymat_det(pencil));

    const Realization r = realize_full(resolvent, seed);
    if (r.dim() != dim) throw InternalError("resolvent realization has the wrong dimension");
    const Matrix identity = Matrix::identity(field, dim);
    if (!(r.H * r.G == identity))
        throw InternalError("resolvent realization does not satisfy H G = I");
    if (!(r.H * r.F * r.G == a))
        throw InternalError("resolvent realization does not recover the input matrix");

    // Permute the blocks into canonical order (exponents ascending within
    // each prime); columns of the transform move in the same groups.
    std::vector<std::size_t> order(r.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return divisor_less(r.blocks[x], r.blocks[y]);
    });
    std::vector<std::size_t> offset(r.blocks.size() + 1, 0);
    for (std::size_t b = 0; b < r.blocks.size(); ++b)
        offset[b + 1] = offset[b] + static_cast<std::size_t>(r.blocks[b].first.degree()) * r.blocks[b].second;

    JacobsonForm out{Matrix(field, dim, dim), Matrix(field, dim, dim), {}};
    Matrix s_inverse(field, dim, dim);
    std::size_t at = 0;
    for (std::size_t b : order) {
        const auto& [prime, k] = r.blocks[b];
        const std::size_t width = static_cast<std::size_t>(prime.degree()) * k;
        const Matrix block = jacobson_block(prime, k);
        for (std::size_t i = 0; i < width; ++i)
            for (std::size_t j = 0; j < width; ++j) out.J.at(at + i, at + j) = block.at(i, j);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < width; ++j) out.S.at(i, at + j) = r.H.at(i, offset[b] + j);
        for (std::size_t i = 0; i < width; ++i)
            for (std::size_t j = 0; j < dim; ++j) s_inverse.at(at + i, j) = r.G.at(offset[b] + i, j);
        out.divisors.emplace_back(prime, k);
        at += width;
    }

    if (!(out.S * out.J * s_inverse == a))
        throw InternalError("similarity transform does not reproduce the input matrix");
    if (!(out.divisors == elementary_divisors(a, seed)))
        throw InternalError("resolvent and Smith-form elementary divisors disagree");
    return out;
}

}  // namespace minreal
