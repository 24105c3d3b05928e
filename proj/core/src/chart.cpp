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

#include "wrgw/chart.hpp"

#include <numeric>

namespace wrgw {

Chart::Chart(int m, int p, std::vector<Poly> base_basis)
    : m_(m), p_(p), basis_(std::move(base_basis)) {
    if (m_ < 1 || p_ < 1) throw std::invalid_argument("Chart: m, p must be positive");
    if (basis_.size() != static_cast<std::size_t>(m_ + p_))
        throw std::invalid_argument("Chart: base basis must have m+p polynomials");
    for (const auto& e : basis_) {
        if (e.field() != basis_.front().field())
            throw std::invalid_argument("Chart: basis field mismatch");
        if (e.degree() >= m_ + p_)
            throw std::invalid_argument("Chart: basis degree exceeds m+p-1");
    }
    if (basis_matrix().rank() != static_cast<std::size_t>(m_ + p_))
        throw std::invalid_argument("Chart: base basis is not a basis (change-of-basis singular)");
}

Chart Chart::standard(const Field& k, int m, int p) {
    std::vector<Poly> basis;
    basis.reserve(static_cast<std::size_t>(m + p));
    for (int i = 0; i < m + p; ++i) basis.push_back(Poly::monomial(k, static_cast<unsigned>(i)));
    return Chart(m, p, std::move(basis));
}

ScalarMatrix Chart::basis_matrix() const {
    const Field& k = field();
    auto n = static_cast<std::size_t>(m_ + p_);
    ScalarMatrix mtx(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j <= basis_[i].degree(); ++j)
            mtx.set(i, static_cast<std::size_t>(j), basis_[i].coeff(static_cast<unsigned>(j)));
    return mtx;
}

bool Chart::monic_graded() const {
    for (int i = 0; i < m_ + p_; ++i) {
        const Poly& e = basis_[static_cast<std::size_t>(i)];
        if (e.degree() != i || !e.is_monic()) return false;
    }
    return true;
}

std::vector<Poly> Chart::moving_rows(const ScalarMatrix& x) const {
    if (x.rows() != static_cast<std::size_t>(m_) || x.cols() != static_cast<std::size_t>(p_))
        throw std::invalid_argument("Chart::moving_rows: x must be m x p");
    std::vector<Poly> rows;
    rows.reserve(static_cast<std::size_t>(m_));
    for (int g = 0; g < m_; ++g) {
        Poly f = basis_[static_cast<std::size_t>(p_ + g)];
        for (int k = 0; k < p_; ++k)
            f = f + basis_[static_cast<std::size_t>(k)] *
                        x.at(static_cast<std::size_t>(g), static_cast<std::size_t>(k));
        rows.push_back(std::move(f));
    }
    return rows;
}

Subspace Chart::point(const ScalarMatrix& x) const {
    return Subspace::from_polys(moving_rows(x), m_ + p_);
}

Subspace Chart::center() const {
    std::vector<Poly> gens(basis_.begin() + p_, basis_.end());
    return Subspace::from_polys(gens, m_ + p_);
}

Subspace chart_normalize(const Subspace& w, int m, int p) {
    if (w.ambient_dim() != m + p || w.plane_dim() != m)
        throw std::invalid_argument("chart_normalize: dimension mismatch");
    ScalarMatrix basis = w.basis();
    std::vector<std::size_t> order;
    for (int c = p; c < m + p; ++c) order.push_back(static_cast<std::size_t>(c));
    for (int c = 0; c < p; ++c) order.push_back(static_cast<std::size_t>(c));
    std::vector<std::size_t> pivots = basis.rref(order);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] != static_cast<std::size_t>(p) + i)
            throw std::domain_error("not in chart: distinguished minor is singular");
    return Subspace(std::move(basis));
}

Scalar xij_from_plucker(const Subspace& w_normalized, int i, int j, int m, int p) {
    Scalar z = w_normalized.plucker(distinguished_multiindex(i, j, m, p));
    return (i % 2 == 1) ? z : -z;
}

} // namespace wrgw
