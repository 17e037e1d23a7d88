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

#include "minreal/matrix.hpp"

#include <utility>

namespace minreal {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
    return m;
}

Matrix Matrix::from_ints(const Field& field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw UsageError("ragged rows in matrix literal");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = FieldElement(field, v);
        ++i;
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

FieldElement& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
    return entries_[i * cols_ + j];
}

const FieldElement& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
    return entries_[i * cols_ + j];
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    check_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix shape mismatch in addition");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    check_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix shape mismatch in subtraction");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    check_same_field(lhs.field_, rhs.field_);
    if (lhs.cols_ != rhs.rows_) throw UsageError("matrix shape mismatch in product");
    Matrix out(lhs.field_, lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const FieldElement& a = lhs.at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    }
    return out;
}

Matrix operator*(const FieldElement& scalar, const Matrix& m) {
    check_same_field(scalar.field(), m.field_);
    Matrix out = m;
    for (auto& e : out.entries_) e *= scalar;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::size_t Matrix::rank() const {
    Matrix w = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
        const FieldElement inv = w.at(rank, col).inverse();
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            if (w.at(i, col).is_zero()) continue;
            const FieldElement factor = w.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) w.at(i, j) -= factor * w.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

FieldElement Matrix::det() const {
    if (!is_square()) throw UsageError("determinant requires a square matrix");
    Matrix w = *this;
    FieldElement result = FieldElement::one(field_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return FieldElement::zero(field_);
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            result = -result;
        }
        result *= w.at(col, col);
        const FieldElement inv = w.at(col, col).inverse();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (w.at(i, col).is_zero()) continue;
            const FieldElement factor = w.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) w.at(i, j) -= factor * w.at(col, j);
        }
    }
    return result;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw UsageError("inverse requires a square matrix");
    Matrix w = *this;
    Matrix inv = Matrix::identity(field_, rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) throw ArithmeticError("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const FieldElement scale = w.at(col, col).inverse();
        for (std::size_t j = 0; j < cols_; ++j) {
            w.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            const FieldElement factor = w.at(i, col);
            for (std::size_t j = 0; j < cols_; ++j) {
                w.at(i, j) -= factor * w.at(col, j);
                inv.at(i, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
    check_same_field(left.field(), right.field());
    if (left.rows() != right.rows()) throw UsageError("hstack row mismatch");
    Matrix out(left.field(), left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) out.at(i, j) = left.at(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) out.at(i, left.cols() + j) = right.at(i, j);
    }
    return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    check_same_field(top.field(), bottom.field());
    if (top.cols() != bottom.cols()) throw UsageError("vstack column mismatch");
    Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) out.at(top.rows() + i, j) = bottom.at(i, j);
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    check_same_field(a.field(), b.field());
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const FieldElement& s = a.at(i, j);
            if (s.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = s * b.at(k, l);
        }
    }
    return out;
}

Matrix upper_shift(const Field& field, std::size_t k) {
    Matrix out(field, k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) out.at(i, i + 1) = FieldElement::one(field);
    return out;
}

}  // namespace minreal
