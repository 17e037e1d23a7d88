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

#include "minreal/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace minreal {

namespace {

constexpr int kMaxReconstructionDegree = 8;
constexpr std::uint64_t kPrimeCap = std::uint64_t(1) << 31;
constexpr int kSplitAttemptCap = 100000;

using Rng = std::mt19937_64;

// ---------------------------------------------------------------- GF(p) ---

Poly pow_mod(const Poly& base, const mpz_class& exponent, const Poly& mod) {
    const Field& field = base.field();
    Poly result = Poly::constant(FieldElement::one(field));
    if (exponent == 0) return result;
    Poly b = base % mod;
    const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % mod;
        if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % mod;
    }
    return result;
}

// f with f' = 0 over GF(p) is g(s^p) = g(s)^p on the prime field.
Poly pth_root(const Poly& f) {
    const auto p = static_cast<std::size_t>(f.field().modulus());
    std::vector<FieldElement> out;
    for (std::size_t i = 0; i * p <= static_cast<std::size_t>(f.degree()); ++i) {
        out.push_back(f.coeff(i * p));
    }
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i % p != 0 && !f.coeffs()[i].is_zero())
            throw InternalError("p-th root requested of a polynomial that is not one");
    }
    return Poly(f.field(), std::move(out));
}

Poly random_poly_below(const Field& field, int degree_bound, Rng& rng) {
    const std::uint64_t p = field.modulus();
    std::vector<FieldElement> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree_bound));
    for (int i = 0; i < degree_bound; ++i)
        coeffs.push_back(FieldElement(field, static_cast<long long>(rng() % p)));
    return Poly(field, std::move(coeffs));
}

// Cantor-Zassenhaus equal-degree split: f monic squarefree, every
// irreducible factor of degree exactly d.
void equal_degree_split(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Field& field = f.field();
    const std::uint64_t p = field.modulus();
    const Poly one = Poly::constant(FieldElement::one(field));
    for (int attempt = 0; attempt < kSplitAttemptCap; ++attempt) {
        Poly a = random_poly_below(field, f.degree(), rng);
        if (a.degree() < 1) continue;
        Poly candidate(field);
        if (p == 2) {
            // Trace map over GF(2^d).
            Poly acc = a, power = a;
            for (int i = 1; i < d; ++i) {
                power = (power * power) % f;
                acc += power;
            }
            candidate = poly_gcd(acc.is_zero() ? f : acc, f);
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            Poly b = pow_mod(a, e, f) - one;
            if (b.is_zero()) continue;
            candidate = poly_gcd(b, f);
        }
        if (candidate.degree() > 0 && candidate.degree() < f.degree()) {
            equal_degree_split(candidate, d, rng, out);
            equal_degree_split(f / candidate, d, rng, out);
            return;
        }
    }
    throw InternalError("equal-degree splitting failed to converge");
}

// f monic squarefree over GF(p): all distinct irreducible factors.
std::vector<Poly> factor_squarefree_gf(const Poly& f, Rng& rng) {
    std::vector<Poly> out;
    const Field& field = f.field();
    Poly rest = f;
    Poly x = Poly::variable(field);
    Poly frob = x;  // s^(p^d) mod rest
    const mpz_class p(static_cast<unsigned long>(field.modulus()));
    for (int d = 1; rest.degree() > 0; ++d) {
        if (2 * d > rest.degree()) {
            out.push_back(rest);
            break;
        }
        frob = pow_mod(frob, p, rest);
        Poly g = poly_gcd(frob - x + rest, rest);  // + rest keeps the argument nonzero
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            rest = rest / g;
            frob = frob % rest;
        }
    }
    return out;
}

std::vector<Poly> distinct_irreducible_factors_gf(Poly f, Rng& rng) {
    std::vector<Poly> out;
    while (f.degree() > 0) {
        Poly fd = f.derivative();
        if (fd.is_zero()) {
            f = pth_root(f);
            continue;
        }
        const Poly radical = f / poly_gcd(f, fd);
        for (Poly& q : factor_squarefree_gf(radical, rng)) {
            while (divides(q, f)) f = f / q;
            out.push_back(std::move(q));
        }
    }
    return out;
}

// --------------------------------------------------------------- Q side ---

using ZPoly = std::vector<mpz_class>;  // ascending, no trailing-zero guarantee

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

// Exact division in Z[s]; returns false when d does not divide a there.
bool zdivide_exact(const ZPoly& a, const ZPoly& d, ZPoly& quotient) {
    ZPoly rem = a;
    ztrim(rem);
    if (d.empty()) return false;
    quotient.assign(rem.size() > d.size() - 1 ? rem.size() - d.size() + 1 : 0, mpz_class(0));
    while (zdeg(rem) >= zdeg(d)) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), d.back().get_mpz_t());
        if (r != 0) return false;
        const std::size_t shift = rem.size() - d.size();
        quotient[shift] = q;
        for (std::size_t j = 0; j < d.size(); ++j) rem[shift + j] -= q * d[j];
        ztrim(rem);
    }
    return rem.empty();
}

mpz_class zcontent(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void zmake_primitive(ZPoly& a) {
    ztrim(a);
    if (a.empty()) return;
    mpz_class g = zcontent(a);
    if (sgn(a.back()) < 0) g = -g;
    for (auto& c : a) c /= g;
}

ZPoly to_integer_poly(const Poly& f) {
    mpz_class scale = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.rational().get_den().get_mpz_t());
    ZPoly out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        mpq_class v = c.rational() * scale;
        out.push_back(v.get_num());
    }
    zmake_primitive(out);
    return out;
}

Poly to_monic_q_poly(const Field& field, const ZPoly& a) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(a.size());
    for (const auto& c : a) coeffs.push_back(FieldElement::from_integer(field, c));
    return Poly(field, std::move(coeffs)).monic();
}

Poly reduce_mod(const ZPoly& a, const Field& gf) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(a.size());
    for (const auto& c : a) coeffs.push_back(FieldElement::from_integer(gf, c));
    return Poly(gf, std::move(coeffs));
}

const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> out;
        std::vector<bool> sieve(1001, true);
        for (std::uint64_t n = 2; n <= 1000; ++n) {
            if (!sieve[n]) continue;
            out.push_back(n);
            for (std::uint64_t m = n * n; m <= 1000; m += n) sieve[m] = false;
        }
        return out;
    }();
    return primes;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Deterministic irreducibility over GF(q) by distinct-degree scan.
bool is_irreducible_gf(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Field& field = f.field();
    const mpz_class p(static_cast<unsigned long>(field.modulus()));
    Poly x = Poly::variable(field);
    Poly frob = x;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        frob = pow_mod(frob, p, f);
        Poly g = poly_gcd(frob - x + f, f);
        if (g.degree() > 0) return false;
    }
    return true;
}

bool stays_squarefree_mod(const ZPoly& rz, const Field& gf) {
    const Poly f = reduce_mod(rz, gf);
    if (f.degree() != zdeg(rz)) return false;  // leading coefficient vanished
    const Poly fd = f.derivative();
    if (fd.is_zero()) return false;
    return poly_gcd(f, fd).degree() == 0;
}

// Coefficient bound for the symmetric lift of lc * (any monic factor).
mpz_class factor_coeff_bound(const ZPoly& rz) {
    mpz_class norm_sq = 0;
    for (const auto& c : rz) norm_sq += c * c;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), norm_sq.get_mpz_t());
    root += 1;
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(zdeg(rz)));
    return abs(rz.back()) * two_pow * root;
}

ZPoly lift_symmetric(const Poly& f, const mpz_class& q) {
    ZPoly out;
    out.reserve(f.coeffs().size());
    const mpz_class half = q / 2;
    for (const auto& c : f.coeffs()) {
        mpz_class v(static_cast<unsigned long>(c.residue()));
        if (v > half) v -= q;
        out.push_back(v);
    }
    return out;
}

// Zassenhaus recombination of big-prime modular factors. rz is primitive
// squarefree with positive leading coefficient; returns its irreducible
// primitive factors.
std::vector<ZPoly> recombine(ZPoly rz, std::vector<Poly> modular, const Field& gf) {
    const mpz_class q(static_cast<unsigned long>(gf.modulus()));
    std::vector<ZPoly> out;
    std::size_t size = 1;
    while (2 * size <= modular.size()) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        bool advanced_size = false;
        while (true) {
            Poly prod = Poly::constant(FieldElement::from_integer(gf, rz.back()));
            for (std::size_t i : idx) prod = prod * modular[i];
            ZPoly candidate = lift_symmetric(prod, q);
            zmake_primitive(candidate);
            ZPoly quotient;
            if (!candidate.empty() && zdivide_exact(rz, candidate, quotient)) {
                out.push_back(candidate);
                rz = quotient;
                zmake_primitive(rz);
                std::vector<Poly> rest;
                for (std::size_t i = 0, k = 0; i < modular.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    rest.push_back(modular[i]);
                }
                modular = std::move(rest);
                advanced_size = true;  // restart the same size on the reduced set
                break;
            }
            // next combination
            std::size_t pos = size;
            while (pos-- > 0) {
                if (idx[pos] + (size - pos) < modular.size()) {
                    ++idx[pos];
                    for (std::size_t j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (pos == 0) {
                    pos = std::size_t(-1);
                    break;
                }
            }
            if (pos == std::size_t(-1)) break;
        }
        if (!advanced_size) ++size;
    }
    if (zdeg(rz) >= 1) out.push_back(rz);
    return out;
}

// r monic squarefree over the rationals: its distinct irreducible factors.
std::vector<Poly> factor_squarefree_q(const Poly& r, Rng& rng) {
    const Field& field = r.field();
    if (r.degree() == 1) return {r};
    ZPoly rz = to_integer_poly(r);

    // Certification scan: any prime keeping r squarefree and irreducible.
    for (std::uint64_t q : small_primes()) {
        if (mpz_divisible_ui_p(rz.back().get_mpz_t(), static_cast<unsigned long>(q))) continue;
        const Field gf = Field::gf(q);
        if (!stays_squarefree_mod(rz, gf)) continue;
        if (is_irreducible_gf(reduce_mod(rz, gf))) return {r};
    }

    if (r.degree() > kMaxReconstructionDegree)
        throw FactorRangeError("factorization out of supported range over q: degree " +
                               std::to_string(r.degree()) + " part admits no certifying prime");

    const mpz_class bound = 2 * factor_coeff_bound(rz) + 1;
    if (bound >= mpz_class(static_cast<unsigned long>(kPrimeCap)))
        throw FactorRangeError("factorization out of supported range over q: coefficient bound exceeds 2^31");
    std::uint64_t q = static_cast<std::uint64_t>(bound.get_ui()) | 1u;
    for (;; q += 2) {
        if (q >= kPrimeCap)
            throw FactorRangeError("factorization out of supported range over q: no usable big prime");
        if (!is_prime_u64(q)) continue;
        if (mpz_divisible_ui_p(rz.back().get_mpz_t(), static_cast<unsigned long>(q))) continue;
        if (stays_squarefree_mod(rz, Field::gf(q))) break;
    }

    const Field gf = Field::gf(q);
    std::vector<Poly> modular = factor_squarefree_gf(reduce_mod(rz, gf).monic(), rng);
    std::sort(modular.begin(), modular.end(), poly_less);
    std::vector<Poly> out;
    for (const ZPoly& zfactor : recombine(std::move(rz), std::move(modular), gf))
        out.push_back(to_monic_q_poly(field, zfactor));
    return out;
}

std::vector<Poly> distinct_irreducible_factors_q(const Poly& f, Rng& rng) {
    // In characteristic zero the radical already lists every irreducible.
    const Poly radical = f.degree() > 0 ? f / poly_gcd(f, f.derivative()) : f;
    std::vector<Poly> out;
    if (radical.degree() < 1) return out;
    for (Poly& part : factor_squarefree_q(radical.monic(), rng)) out.push_back(std::move(part));
    return out;
}

}  // namespace

Poly Factorization::reassemble() const {
    Poly out = Poly::constant(unit);
    for (const auto& [p, e] : factors) out = out * p.pow(e);
    return out;
}

Factorization poly_factor(const Poly& a, std::uint64_t seed) {
    if (a.is_zero()) throw UsageError("cannot factor the zero polynomial");
    Factorization result{a.is_constant() ? a.coeff(0) : a.leading_coeff(), {}};
    if (a.is_constant()) return result;

    Rng rng(seed);
    Poly f = a.monic();
    std::vector<Poly> irreducibles = a.field().is_prime_field()
                                         ? distinct_irreducible_factors_gf(f, rng)
                                         : distinct_irreducible_factors_q(f, rng);
    std::sort(irreducibles.begin(), irreducibles.end(), poly_less);
    for (const Poly& q : irreducibles) {
        unsigned mult = 0;
        while (divides(q, f)) {
            f = f / q;
            ++mult;
        }
        if (mult == 0) throw InternalError("claimed irreducible factor does not divide its input");
        result.factors.emplace_back(q, mult);
    }
    if (!f.is_one()) throw InternalError("polynomial factorization left an unfactored part");
    if (!(result.reassemble() == a)) throw InternalError("polynomial factorization failed its product check");
    return result;
}

bool is_irreducible(const Poly& a, std::uint64_t seed) {
    if (a.degree() < 1) return false;
    if (a.field().is_prime_field()) return is_irreducible_gf(a.monic());
    const Factorization f = poly_factor(a, seed);
    return f.factors.size() == 1 && f.factors.front().second == 1;
}

}  // namespace minreal
