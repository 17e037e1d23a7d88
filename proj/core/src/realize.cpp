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

#include "minreal/realize.hpp"

#include "minreal/factor.hpp"

namespace minreal {

Matrix companion(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1) throw UsageError("companion matrix requires a monic polynomial of degree >= 1");
    const Field& field = p.field();
    const auto n = static_cast<std::size_t>(p.degree());
    Matrix c(field, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) c.at(i, i + 1) = FieldElement::one(field);
    for (std::size_t j = 0; j < n; ++j) c.at(n - 1, j) = -p.coeff(j);
    return c;
}

Matrix companion_symmetrizer(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1) throw UsageError("symmetrizer requires a monic polynomial of degree >= 1");
    const Field& field = p.field();
    const auto n = static_cast<std::size_t>(p.degree());
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t idx = i + j + 1;
            if (idx < n) m.at(i, j) = p.coeff(idx);
            else if (idx == n) m.at(i, j) = FieldElement::one(field);  // monic leading coefficient
        }
    return m;
}

Matrix jacobson_block(const Poly& p, unsigned k) {
    if (k < 1) throw UsageError("Jacobson block requires k >= 1");
    const Matrix c = companion(p);
    const Field& field = p.field();
    const auto n = static_cast<std::size_t>(p.degree());
    Matrix j(field, n * k, n * k);
    for (unsigned b = 0; b < k; ++b) {
        const std::size_t off = static_cast<std::size_t>(b) * n;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t col = 0; col < n; ++col) j.at(off + r, off + col) = c.at(r, col);
        if (b + 1 < k) j.at(off + n - 1, off + n) = FieldElement::one(field);  // corner of e_n e_1^T
    }
    return j;
}

Realization Realization::empty(const Field& field, std::size_t outputs, std::size_t inputs) {
    return {field, Matrix(field, 0, 0), Matrix(field, 0, inputs), Matrix(field, outputs, 0), {}};
}

namespace {

// Gcd of the prime with the content of the vector; degree > 0 means the
// factorization h (1/p^k) g^T is not coprime on this side.
Poly content_gcd_with(const PolyVec& v, const Poly& p) {
    Poly content(p.field());
    for (const Poly& entry : v) {
        check_same_field(entry.field(), p.field());
        if (entry.is_zero()) continue;
        content = content.is_zero() ? entry : poly_gcd(content, entry);
        if (content.is_constant()) break;
    }
    if (content.is_zero()) return p;  // zero vector: divisible by p
    return poly_gcd(content, p);
}

}  // namespace

Realization realize_rank1(const PolyVec& h, const PolyVec& g, const Poly& p, unsigned k,
                          std::uint64_t seed) {
    if (!p.is_monic() || p.degree() < 1) throw UsageError("rank-one realization requires a monic prime");
    if (!is_irreducible(p, seed)) throw UsageError("rank-one realization requires an irreducible prime");
    if (k < 1) throw UsageError("rank-one realization requires k >= 1");
    const Poly hg = content_gcd_with(h, p);
    if (hg.degree() > 0)
        throw UsageError("not a coprime factorization: gcd(h, p) = " + hg.str());
    const Poly gg = content_gcd_with(g, p);
    if (gg.degree() > 0)
        throw UsageError("not a coprime factorization: gcd(g, p) = " + gg.str());

    const Field& field = p.field();
    const auto n = static_cast<std::size_t>(p.degree());
    const Matrix symmetrizer_inv = companion_symmetrizer(p).inverse();

    const PadicExpansion eh = padic_expand(h, p);
    const PadicExpansion eg = padic_expand(g, p);
    const PolyVec zero_digit_h(h.size(), Poly(field));
    const PolyVec zero_digit_g(g.size(), Poly(field));

    // H = (H_0 ... H_{k-1}) from the digits of h.
    Matrix out_h(field, h.size(), 0);
    for (unsigned i = 0; i < k; ++i) {
        const PolyVec& digit = i < eh.digits.size() ? eh.digits[i] : zero_digit_h;
        out_h = hstack(out_h, coeff_matrix(digit, n, field));
    }

    // G stacks G_{k-1}^T, ..., G_0^T where the digit pairing runs through
    // the symmetrizer: g_i = G_i M b.
    Matrix out_g(field, 0, g.size());
    for (unsigned i = k; i-- > 0;) {
        const PolyVec& digit = i < eg.digits.size() ? eg.digits[i] : zero_digit_g;
        const Matrix gi = coeff_matrix(digit, n, field) * symmetrizer_inv;
        out_g = vstack(out_g, gi.transpose());
    }

    return {field, jacobson_block(p, k), std::move(out_g), std::move(out_h), {{p, k}}};
}

Realization realize_prime_component(const PrimeComponent& component, std::uint64_t seed) {
    const SmithMcMillan sm = smith_mcmillan(component);
    const Field& field = component.prime.field();
    std::vector<Realization> parts;
    for (std::size_t i = 0; i < sm.rank; ++i) {
        const unsigned k = sm.exponents[i];
        if (k == 0) continue;  // projects to zero
        const Poly pk = sm.prime.pow(k);
        const Poly reduced_numerator = sm.numerators[i] % pk;
        PolyVec h, g;
        for (std::size_t r = 0; r < sm.outputs(); ++r) h.push_back(sm.U.at(r, i) * reduced_numerator);
        for (std::size_t r = 0; r < sm.inputs(); ++r) g.push_back(sm.V.at(r, i));
        parts.push_back(realize_rank1(h, g, sm.prime, k, seed));
    }
    return direct_sum(field, sm.outputs(), sm.inputs(), parts);
}

Realization direct_sum(const Field& field, std::size_t outputs, std::size_t inputs,
                       std::span<const Realization> parts) {
    Realization out = Realization::empty(field, outputs, inputs);
    for (const Realization& part : parts) {
        check_same_field(field, part.field);
        if (part.outputs() != outputs || part.inputs() != inputs)
            throw UsageError("direct sum requires matching input/output counts");
        const std::size_t d0 = out.dim(), d1 = part.dim();
        Matrix f(field, d0 + d1, d0 + d1);
        for (std::size_t i = 0; i < d0; ++i)
            for (std::size_t j = 0; j < d0; ++j) f.at(i, j) = out.F.at(i, j);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j) f.at(d0 + i, d0 + j) = part.F.at(i, j);
        out.F = std::move(f);
        out.G = vstack(out.G, part.G);
        out.H = hstack(out.H, part.H);
        out.blocks.insert(out.blocks.end(), part.blocks.begin(), part.blocks.end());
    }
    return out;
}

Realization realize_full(const RatMatrix& T, std::uint64_t seed) {
    if (!T.is_strictly_proper())
        throw UsageError("realization requires a strictly proper matrix; project with pi_minus first");
    std::vector<Realization> parts;
    for (const PrimeComponent& component : partial_fractions(T, seed))
        parts.push_back(realize_prime_component(component, seed));
    return direct_sum(T.field(), T.rows(), T.cols(), parts);
}

}  // namespace minreal
