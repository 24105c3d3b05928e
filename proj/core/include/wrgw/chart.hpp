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

#ifndef WRGW_CHART_HPP
#define WRGW_CHART_HPP

#include "wrgw/subspace.hpp"

namespace wrgw {

/// Moving-basis affine chart on Gr(m, m+p): a basis e_1, ..., e_{m+p} of
/// k_{m+p-1}[t] together with the parametrization
///     x  |->  span{ e_{p+g} + sum_k x_{g,k} e_k : 1 <= g <= m }.
/// The chart is centered at span{e_{p+1}, ..., e_{m+p}}.
class Chart {
public:
    Chart(int m, int p, std::vector<Poly> base_basis);

    /// The monomial chart e_i = t^{i-1}.
    static Chart standard(const Field& k, int m, int p);

    [[nodiscard]] const Field& field() const { return basis_.front().field(); }
    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] const std::vector<Poly>& base_basis() const { return basis_; }
    [[nodiscard]] const Poly& basis_poly(int i) const { return basis_.at(static_cast<std::size_t>(i)); }

    /// Basis vectors as rows of an (m+p) x (m+p) matrix in the monomial basis.
    [[nodiscard]] ScalarMatrix basis_matrix() const;

    /// Each e_i monic of degree i-1 (the shape the diagram tests need: the
    /// moving rows then keep leading monomials t^p, ..., t^{m+p-1}).
    [[nodiscard]] bool monic_graded() const;

    /// The m moving-basis rows e_{p+g} + sum_k x_{g,k} e_k at the point x
    /// (x is m rows by p columns).
    [[nodiscard]] std::vector<Poly> moving_rows(const ScalarMatrix& x) const;

    /// The chart point as a subspace in the monomial basis.
    [[nodiscard]] Subspace point(const ScalarMatrix& x) const;

    /// Center span{e_{p+1}, ..., e_{m+p}}.
    [[nodiscard]] Subspace center() const;

private:
    int m_, p_;
    std::vector<Poly> basis_;
};

/// Rewrites a spanning matrix of W into standard-chart form: reduced row
/// echelon with pivots at columns p+1, ..., p+m (identity minor there).
/// Throws "not in chart" if that minor is singular.
[[nodiscard]] Subspace chart_normalize(const Subspace& w, int m, int p);

/// Chart coordinate recovered from a Plucker minor of the normalized
/// spanning matrix: x_{i,j} = (-1)^{i-1} z_{alpha(i,j)}(W). 1-based i <= m,
/// j <= p. W must be normalized as by chart_normalize.
[[nodiscard]] Scalar xij_from_plucker(const Subspace& w_normalized, int i, int j, int m, int p);

} // namespace wrgw

#endif
