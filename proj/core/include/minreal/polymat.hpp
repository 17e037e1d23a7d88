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
#include <vector>

#include "minreal/matrix.hpp"
#include "minreal/poly.hpp"
#include "minreal/ratfun.hpp"

namespace minreal {

/// Dense rectangular matrix over K[s], row-major.
class PolyMatrix {
  public:
    PolyMatrix(const Field& field, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(const Field& field, std::size_t n);
    static PolyMatrix of_scalar(const Matrix& m);
    /// sI - A for square scalar A.
    static PolyMatrix s_identity_minus(const Matrix& a);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Poly& at(std::size_t i, std::size_t j);
    const Poly& at(std::size_t i, std::size_t j) const;

    PolyMatrix transpose() const;

    PolyMatrix& operator+=(const PolyMatrix& rhs);
    PolyMatrix& operator-=(const PolyMatrix& rhs);
    friend PolyMatrix operator+(PolyMatrix lhs, const PolyMatrix& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend PolyMatrix operator-(PolyMatrix lhs, const PolyMatrix& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);
    friend PolyMatrix operator*(const Poly& scalar, const PolyMatrix& m);

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Poly> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination over K[s].
Poly polymat_det(const PolyMatrix& a);

/// Adjugate over K[s]: one fraction-free forward elimination plus exact
/// polynomial back substitution per column; falls back to cofactor minors
/// when the matrix is singular. Satisfies A * adj(A) = det(A) * I.
PolyMatrix polymat_adjugate(const PolyMatrix& a);

/// True iff det is a nonzero constant; UsageError on non-square input.
bool is_unimodular(const PolyMatrix& a);

/// Exact inverse of a unimodular matrix (adjugate over the constant det).
PolyMatrix unimodular_inverse(const PolyMatrix& a);

/// U * A * V = S with U, V unimodular and S diagonal holding the monic
/// invariant factors d_1 | d_2 | ... followed by zeros.
struct SmithDecomposition {
    PolyMatrix U;
    PolyMatrix S;
    PolyMatrix V;
    std::size_t rank;

    std::vector<Poly> invariant_factors() const;
};

/// Elimination on the minimal-degree pivot (ties broken by smallest row,
/// then column) with division-based reduction and divisibility repair.
SmithDecomposition smith_form(const PolyMatrix& a);

RatMatrix to_rational(const PolyMatrix& m);
/// Entrywise m / d, reduced.
RatMatrix rational_divide(const PolyMatrix& m, const Poly& d);

}  // namespace minreal
