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

#include "minreal/polymat.hpp"

#include <optional>
#include <utility>

namespace minreal {

PolyMatrix::PolyMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Poly(field)) {}

PolyMatrix PolyMatrix::identity(const Field& field, std::size_t n) {
    PolyMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::from_ints(field, {1});
    return m;
}

PolyMatrix PolyMatrix::of_scalar(const Matrix& m) {
    PolyMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = Poly::constant(m.at(i, j));
    return out;
}

PolyMatrix PolyMatrix::s_identity_minus(const Matrix& a) {
    if (!a.is_square()) throw UsageError("sI - A requires a square matrix");
    PolyMatrix out(a.field(), a.rows(), a.cols());
    const Poly s = Poly::variable(a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out.at(i, j) = -Poly::constant(a.at(i, j));
            if (i == j) out.at(i, j) += s;
        }
    return out;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Poly& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
    return entries_[i * cols_ + j];
}

const Poly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
    return entries_[i * cols_ + j];
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
    check_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix shape mismatch in addition");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
    check_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix shape mismatch in subtraction");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
    check_same_field(lhs.field_, rhs.field_);
    if (lhs.cols_ != rhs.rows_) throw UsageError("matrix shape mismatch in product");
    PolyMatrix out(lhs.field_, lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Poly& a = lhs.at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

PolyMatrix operator*(const Poly& scalar, const PolyMatrix& m) {
    PolyMatrix out = m;
    for (auto& e : out.entries_) e = scalar * e;
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw InternalError("fraction-free elimination hit an inexact division");
    return q;
}

struct BareissResult {
    std::vector<std::vector<Poly>> w;  // row-echelon [R | T] with T * A = R
    Poly det;                          // signed determinant of A
    bool singular;
};

// Forward fraction-free elimination of [A | I].
BareissResult bareiss_forward(const PolyMatrix& a, bool augment) {
    const Field& field = a.field();
    const std::size_t n = a.rows();
    const std::size_t width = augment ? 2 * n : n;
    std::vector<std::vector<Poly>> w(n, std::vector<Poly>(width, Poly(field)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a.at(i, j);
        if (augment) w[i][n + i] = Poly::from_ints(field, {1});
    }
    bool negate = false;
    Poly prev = Poly::from_ints(field, {1});
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && w[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return {std::move(w), Poly(field), true};
        if (pivot != k) {
            std::swap(w[pivot], w[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j)
                w[i][j] = exact_quotient(w[k][k] * w[i][j] - w[i][k] * w[k][j], prev);
            w[i][k] = Poly(field);
        }
        prev = w[k][k];
    }
    Poly det = w[n - 1][n - 1];
    if (negate) det = -det;
    return {std::move(w), std::move(det), false};
}

// Cofactor route, used only for singular matrices.
PolyMatrix adjugate_by_minors(const PolyMatrix& a) {
    const Field& field = a.field();
    const std::size_t n = a.rows();
    PolyMatrix adj(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            PolyMatrix minor(field, n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc) = a.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            Poly cof = polymat_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj.at(j, i) = std::move(cof);
        }
    }
    return adj;
}

}  // namespace

Poly polymat_det(const PolyMatrix& a) {
    if (!a.is_square()) throw UsageError("determinant requires a square matrix");
    const Field& field = a.field();
    if (a.rows() == 0) return Poly::from_ints(field, {1});
    return bareiss_forward(a, false).det;
}

PolyMatrix polymat_adjugate(const PolyMatrix& a) {
    if (!a.is_square()) throw UsageError("adjugate requires a square matrix");
    const Field& field = a.field();
    const std::size_t n = a.rows();
    if (n == 0) return PolyMatrix(field, 0, 0);
    if (n == 1) return PolyMatrix::identity(field, 1);

    BareissResult fw = bareiss_forward(a, true);
    if (fw.singular) return adjugate_by_minors(a);

    // Solve R y = det * t_j for each column t_j of the transformer; the
    // solution column is polynomial, so every division is exact.
    PolyMatrix adj(field, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Poly> y(n, Poly(field));
        for (std::size_t i = n; i-- > 0;) {
            Poly rhs = fw.det * fw.w[i][n + j];
            for (std::size_t m = i + 1; m < n; ++m) rhs -= fw.w[i][m] * y[m];
            y[i] = exact_quotient(rhs, fw.w[i][i]);
        }
        for (std::size_t i = 0; i < n; ++i) adj.at(i, j) = std::move(y[i]);
    }
    return adj;
}

bool is_unimodular(const PolyMatrix& a) {
    if (!a.is_square()) throw UsageError("unimodularity requires a square matrix");
    const Poly d = polymat_det(a);
    return d.degree() == 0;
}

PolyMatrix unimodular_inverse(const PolyMatrix& a) {
    if (!a.is_square()) throw UsageError("inverse requires a square matrix");
    const Poly d = polymat_det(a);
    if (d.degree() != 0) throw UsageError("matrix is not unimodular");
    return Poly::constant(d.coeff(0).inverse()) * polymat_adjugate(a);
}

std::vector<Poly> SmithDecomposition::invariant_factors() const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(S.at(i, i));
    return out;
}

SmithDecomposition smith_form(const PolyMatrix& a) {
    const Field& field = a.field();
    const std::size_t rows = a.rows(), cols = a.cols();
    PolyMatrix w = a;
    PolyMatrix u = PolyMatrix::identity(field, rows);
    PolyMatrix v = PolyMatrix::identity(field, cols);

    const auto row_sub = [&](std::size_t dst, std::size_t src, const Poly& q) {
        for (std::size_t j = 0; j < cols; ++j) w.at(dst, j) -= q * w.at(src, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) -= q * u.at(src, j);
    };
    const auto col_sub = [&](std::size_t dst, std::size_t src, const Poly& q) {
        for (std::size_t i = 0; i < rows; ++i) w.at(i, dst) -= q * w.at(i, src);
        for (std::size_t i = 0; i < cols; ++i) v.at(i, dst) -= q * v.at(i, src);
    };
    const auto row_add = [&](std::size_t dst, std::size_t src) {
        for (std::size_t j = 0; j < cols; ++j) w.at(dst, j) += w.at(src, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) += u.at(src, j);
    };
    const auto row_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(x, j), w.at(y, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(x, j), u.at(y, j));
    };
    const auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(w.at(i, x), w.at(i, y));
        for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, x), v.at(i, y));
    };

    std::size_t rank = 0;
    const std::size_t steps = rows < cols ? rows : cols;
    for (std::size_t k = 0; k < steps; ++k) {
        for (;;) {
            // Minimal-degree nonzero pivot in the trailing submatrix,
            // smallest (row, col) on ties.
            std::optional<std::pair<std::size_t, std::size_t>> pos;
            int best = -1;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    const Poly& e = w.at(i, j);
                    if (e.is_zero()) continue;
                    if (!pos || e.degree() < best) {
                        pos = {i, j};
                        best = e.degree();
                    }
                }
            if (!pos) break;  // trailing block is zero
            row_swap(k, pos->first);
            col_swap(k, pos->second);

            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (w.at(i, k).is_zero()) continue;
                row_sub(i, k, w.at(i, k) / w.at(k, k));
                if (!w.at(i, k).is_zero()) clean = false;  // remainder survives
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (w.at(k, j).is_zero()) continue;
                col_sub(j, k, w.at(k, j) / w.at(k, k));
                if (!w.at(k, j).is_zero()) clean = false;
            }
            if (!clean) continue;

            // Divisibility repair: pivot must divide the trailing block.
            bool repaired = false;
            for (std::size_t i = k + 1; i < rows && !repaired; ++i)
                for (std::size_t j = k + 1; j < cols && !repaired; ++j)
                    if (!divides(w.at(k, k), w.at(i, j))) {
                        row_add(k, i);
                        repaired = true;
                    }
            if (repaired) continue;

            const FieldElement scale = w.at(k, k).leading_coeff().inverse();
            const Poly factor = Poly::constant(scale);
            for (std::size_t j = 0; j < cols; ++j) w.at(k, j) = factor * w.at(k, j);
            for (std::size_t j = 0; j < rows; ++j) u.at(k, j) = factor * u.at(k, j);
            ++rank;
            break;
        }
        if (rank <= k) break;  // no pivot found: done
    }
    return {std::move(u), std::move(w), std::move(v), rank};
}

RatMatrix to_rational(const PolyMatrix& m) {
    RatMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = RatFun::of_poly(m.at(i, j));
    return out;
}

RatMatrix rational_divide(const PolyMatrix& m, const Poly& d) {
    if (d.is_zero()) throw ArithmeticError("division of a matrix by the zero polynomial");
    RatMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = RatFun(m.at(i, j), d);
    return out;
}

}  // namespace minreal
