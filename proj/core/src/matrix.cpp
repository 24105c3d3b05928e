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

#include "wrgw/matrix.hpp"

#include <numeric>
#include <sstream>

namespace wrgw {

ScalarMatrix::ScalarMatrix(const Field& k, std::size_t rows, std::size_t cols)
    : field_(k), rows_(rows), cols_(cols), data_(rows * cols, Scalar(k)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("ScalarMatrix: dimensions must be positive");
}

ScalarMatrix ScalarMatrix::identity(const Field& k, std::size_t n) {
    ScalarMatrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m.cell(i, i) = Scalar(k, 1);
    return m;
}

ScalarMatrix ScalarMatrix::from_rows(const Field& k, const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw std::invalid_argument("ScalarMatrix::from_rows: empty");
    ScalarMatrix m(k, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("ScalarMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.cell(r, c) = rows[r][c];
    }
    return m;
}

const Scalar& ScalarMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("ScalarMatrix::at");
    return cell(r, c);
}

void ScalarMatrix::set(std::size_t r, std::size_t c, Scalar v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("ScalarMatrix::set");
    if (v.field() != field_) throw std::invalid_argument("ScalarMatrix::set: field mismatch");
    cell(r, c) = std::move(v);
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ScalarMatrix: dimension mismatch in product");
    ScalarMatrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = cell(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.cell(i, j) += a * o.cell(k, j);
        }
    return out;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

ScalarMatrix ScalarMatrix::transposed() const {
    ScalarMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.cell(j, i) = cell(i, j);
    return out;
}

ScalarMatrix ScalarMatrix::stacked(const ScalarMatrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("ScalarMatrix::stacked: column mismatch");
    ScalarMatrix out(field_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.cell(i, j) = cell(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.cell(rows_ + i, j) = o.cell(i, j);
    return out;
}

ScalarMatrix ScalarMatrix::submatrix(const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols) const {
    ScalarMatrix out(field_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.cell(i, j) = at(rows[i], cols[j]);
    return out;
}

namespace {

Scalar cofactor_det(const ScalarMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    const Field& k = m.field();
    if (cols.size() == 1) return m.at(row, cols[0]);
    Scalar acc(k);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Scalar& a = m.at(row, cols[j]);
        if (a.is_zero()) continue;
        std::size_t removed = cols[j];
        cols.erase(cols.begin() + static_cast<long>(j));
        Scalar sub = cofactor_det(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(j), removed);
        Scalar term = a * sub;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

Scalar ScalarMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("ScalarMatrix::det: non-square");
    const std::size_t n = rows_;
    if (n < 6) {
        std::vector<std::size_t> cols(n);
        std::iota(cols.begin(), cols.end(), 0u);
        return cofactor_det(*this, cols, 0);
    }
    // Bareiss fraction-free elimination (exact division at every step).
    ScalarMatrix m(*this);
    Scalar prev(field_, 1);
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.cell(piv, k).is_zero()) ++piv;
        if (piv == n) return Scalar(field_);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.cell(piv, j), m.cell(k, j));
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.cell(i, j) = (m.cell(i, j) * m.cell(k, k) - m.cell(i, k) * m.cell(k, j)) / prev;
            m.cell(i, k) = Scalar(field_);
        }
        prev = m.cell(k, k);
    }
    Scalar d = m.cell(n - 1, n - 1);
    return neg ? -d : d;
}

std::vector<std::size_t> ScalarMatrix::rref(const std::vector<std::size_t>& col_order) {
    std::vector<std::size_t> order = col_order;
    if (order.empty()) {
        order.resize(cols_);
        std::iota(order.begin(), order.end(), 0u);
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c : order) {
        if (r == rows_) break;
        std::size_t piv = r;
        while (piv < rows_ && cell(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(cell(piv, j), cell(r, j));
        Scalar inv = cell(r, c).inverse();
        for (std::size_t j = 0; j < cols_; ++j) cell(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || cell(i, c).is_zero()) continue;
            Scalar f = cell(i, c);
            for (std::size_t j = 0; j < cols_; ++j) cell(i, j) -= f * cell(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t ScalarMatrix::rank() const {
    ScalarMatrix m(*this);
    return m.rref().size();
}

ScalarMatrix ScalarMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("ScalarMatrix::inverse: non-square");
    ScalarMatrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.cell(i, j) = cell(i, j);
        aug.cell(i, cols_ + i) = Scalar(field_, 1);
    }
    std::vector<std::size_t> order(cols_);
    std::iota(order.begin(), order.end(), 0u);
    std::vector<std::size_t> pivots = aug.rref(order);
    if (pivots.size() != rows_) throw std::domain_error("ScalarMatrix::inverse: singular matrix");
    ScalarMatrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.cell(i, j) = aug.cell(i, cols_ + j);
    return out;
}

std::vector<std::vector<Scalar>> ScalarMatrix::nullspace() const {
    ScalarMatrix m(*this);
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> v(cols_, Scalar(field_));
        v[fc] = Scalar(field_, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m.cell(i, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string ScalarMatrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << cell(i, j).str();
        }
        out << "]";
        out << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

Scalar vandermonde(const std::vector<Scalar>& s) {
    if (s.empty()) throw std::invalid_argument("vandermonde: empty node list");
    Scalar v(s.front().field(), 1);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            v *= s[j] - s[i];
    return v;
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(const Field& k, std::size_t rows, std::size_t cols)
    : field_(k), rows_(rows), cols_(cols), data_(rows * cols, Poly(k)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("PolyMatrix: dimensions must be positive");
}

const Poly& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix::at");
    return data_[r * cols_ + c];
}

void PolyMatrix::set(std::size_t r, std::size_t c, Poly v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix::set");
    if (v.field() != field_) throw std::invalid_argument("PolyMatrix::set: field mismatch");
    data_[r * cols_ + c] = std::move(v);
}

namespace {

Poly poly_cofactor_det(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    const Field& k = m.field();
    if (cols.size() == 1) return m.at(row, cols[0]);
    Poly acc(k);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Poly& a = m.at(row, cols[j]);
        if (a.is_zero()) continue;
        std::size_t removed = cols[j];
        cols.erase(cols.begin() + static_cast<long>(j));
        Poly sub = poly_cofactor_det(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(j), removed);
        Poly term = a * sub;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

Poly PolyMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::det: non-square");
    const std::size_t n = rows_;
    if (n < 6) {
        std::vector<std::size_t> cols(n);
        std::iota(cols.begin(), cols.end(), 0u);
        return poly_cofactor_det(*this, cols, 0);
    }
    PolyMatrix m(*this);
    auto cellref = [&](std::size_t r, std::size_t c) -> Poly& {
        return m.data_[r * n + c];
    };
    Poly prev = Poly::constant(Scalar(field_, 1));
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && cellref(piv, k).is_zero()) ++piv;
        if (piv == n) return Poly(field_);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(cellref(piv, j), cellref(k, j));
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                cellref(i, j) = (cellref(i, j) * cellref(k, k) - cellref(i, k) * cellref(k, j)).divexact(prev);
            cellref(i, k) = Poly(field_);
        }
        prev = cellref(k, k);
    }
    Poly d = cellref(n - 1, n - 1);
    return neg ? -d : d;
}

} // namespace wrgw
