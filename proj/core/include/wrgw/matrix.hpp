/*
   Copyright 2026 The wrgw authors

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

#ifndef WRGW_MATRIX_HPP
#define WRGW_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "wrgw/field.hpp"
#include "wrgw/poly.hpp"

namespace wrgw {

/// Dense matrix of Scalars; dimensions fixed at construction.
class ScalarMatrix {
public:
    ScalarMatrix(const Field& k, std::size_t rows, std::size_t cols);
    static ScalarMatrix identity(const Field& k, std::size_t n);
    static ScalarMatrix from_rows(const Field& k, const std::vector<std::vector<Scalar>>& rows);

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] const Scalar& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Scalar v);

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    bool operator==(const ScalarMatrix& o) const;
    [[nodiscard]] ScalarMatrix transposed() const;

    /// Rows stacked on top of o's rows (same column count).
    [[nodiscard]] ScalarMatrix stacked(const ScalarMatrix& o) const;
    /// Submatrix of the given rows/columns (0-based indices).
    [[nodiscard]] ScalarMatrix submatrix(const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) const;

    /// Exact determinant; cofactor expansion below 6, fraction-free
    /// (Bareiss) elimination from 6 on. Throws on non-square input.
    [[nodiscard]] Scalar det() const;
    [[nodiscard]] std::size_t rank() const;

    /// Exact inverse; throws on singular or non-square input.
    [[nodiscard]] ScalarMatrix inverse() const;

    /// In-place reduced row echelon form, trying pivot columns in the given
    /// order (defaults to left-to-right). Returns the pivot columns in the
    /// order they were used.
    std::vector<std::size_t> rref(const std::vector<std::size_t>& col_order = {});

    /// Basis of the right kernel {v : M v = 0}, each of length cols().
    [[nodiscard]] std::vector<std::vector<Scalar>> nullspace() const;

    [[nodiscard]] std::string str() const;

private:
    Scalar& cell(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& cell(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// prod_{i<j} (s_j - s_i); zero iff entries repeat.
[[nodiscard]] Scalar vandermonde(const std::vector<Scalar>& s);

/// Dense matrix of Polys with exact determinants (cofactor below 6,
/// fraction-free elimination with exact division from 6 on).
class PolyMatrix {
public:
    PolyMatrix(const Field& k, std::size_t rows, std::size_t cols);

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] const Poly& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Poly v);

    [[nodiscard]] Poly det() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Poly> data_;
};

} // namespace wrgw

#endif
