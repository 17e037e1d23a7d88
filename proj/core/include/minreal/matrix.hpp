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

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "minreal/field.hpp"

namespace minreal {

/// Dense rectangular matrix of exact field scalars. Row-major storage.
/// Elimination routines use deterministic first-nonzero pivoting.
class Matrix {
  public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_ints(const Field& field,
                            std::initializer_list<std::initializer_list<long long>> rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    FieldElement& at(std::size_t i, std::size_t j);
    const FieldElement& at(std::size_t i, std::size_t j) const;

    Matrix transpose() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix lhs, const Matrix& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Matrix operator*(const FieldElement& scalar, const Matrix& m);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::size_t rank() const;
    FieldElement det() const;
    /// Gauss-Jordan inverse; ArithmeticError when singular.
    Matrix inverse() const;

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> entries_;
};

Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Kronecker product (a_ij * B).
Matrix kron(const Matrix& a, const Matrix& b);

/// k-by-k upper shift matrix: ones on the superdiagonal, zeros elsewhere.
Matrix upper_shift(const Field& field, std::size_t k);

}  // namespace minreal
