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

#ifndef WRGW_WRONSKI_HPP
#define WRGW_WRONSKI_HPP

#include "wrgw/chart.hpp"

namespace wrgw {

/// Wronski determinant det( f_j^{(i-1)} )_{i,j} of m polynomials; a
/// polynomial of degree at most m*p when deg f_j <= m+p-1.
[[nodiscard]] Poly wronskian(const std::vector<Poly>& fs);

/// Wronski polynomial of a plane: wronskian of its spanning rows. Scales by
/// a nonzero constant under change of spanning matrix.
[[nodiscard]] Poly wronskian(const Subspace& w);

/// The (m+p) x m matrix whose column j holds the coefficients of
/// gamma^{(j-1)}(s); entries r!/(r-j+1)! s^{r-j+1}.
[[nodiscard]] ScalarMatrix gamma_matrix(const Scalar& s, int m, int p);

/// det(M . Gamma(s)) for an m x (m+p) coefficient matrix M: the Wronski of
/// the rows of M evaluated at s.
[[nodiscard]] Scalar wr_via_gamma(const ScalarMatrix& coeffs, const Scalar& s);

/// prod_{i=1}^{m-1} i!, the leading Wronski coefficient on graded monic
/// charts, as an element of k.
[[nodiscard]] Scalar wronski_scale(const Field& k, int m);

/// W lies in the big open cell iff its Wronski polynomial has degree
/// exactly m*p.
[[nodiscard]] bool in_big_cell(const Subspace& w, int m, int p);

/// The values Wr(W)(s_i); W is in the fiber over prod (t - s_i) (up to
/// scale) iff all vanish.
[[nodiscard]] std::vector<Scalar> section_values(const Subspace& w, const std::vector<Scalar>& s_list);

/// Local representation of the bundle section in a moving-basis chart: the
/// evaluator x |-> (F_1(x), ..., F_mp(x)) with
/// F_l(x) = Wr(moving rows at x)(s_l). On graded monic charts its zero set
/// in the chart is the Wronski fiber intersected with the chart.
class LocalSection {
public:
    LocalSection(Chart chart, std::vector<Scalar> s_list);

    [[nodiscard]] const Chart& chart() const { return chart_; }
    [[nodiscard]] const std::vector<Scalar>& s_list() const { return s_; }

    [[nodiscard]] std::vector<Scalar> operator()(const ScalarMatrix& x) const;

    /// dF_l/dx_{gamma,k} at x = 0, computed by single-coordinate symbolic
    /// perturbation: substitute x_{gamma,k} = eps, expand the Wronski
    /// determinant at s_l as a polynomial in eps, take the linear
    /// coefficient.
    [[nodiscard]] Scalar partial_at_zero(int gamma, int k, int l) const;

private:
    Chart chart_;
    std::vector<Scalar> s_;
};

/// The three affine maps comparing the chart-restricted Wronski with the
/// trivialized section: coordinate scaling by prod i!, evaluation of a
/// degree < mp coefficient vector at the s_j, and translation by
/// (prod i!) s_j^{mp}.
[[nodiscard]] std::vector<Scalar> scale_map_V(int m, int p, const std::vector<Scalar>& v);
[[nodiscard]] std::vector<Scalar> ev_map(const std::vector<Scalar>& s_list, const std::vector<Scalar>& coeffs);
[[nodiscard]] std::vector<Scalar> tr_map(const std::vector<Scalar>& s_list, int m, int p, const std::vector<Scalar>& v);

/// Jacobian matrix of ev_map: (s_j^{i-1})_{j,i}.
[[nodiscard]] ScalarMatrix ev_jacobian(const std::vector<Scalar>& s_list);

/// One verified unit of the whole setup: a field, the shape (m, p), a chart
/// adapted to W, the mp distinct scalars, and the fiber point W itself.
/// Construction checks: (m+p-1)! invertible, s pairwise distinct, W in the
/// big cell, and Wr(W)(s_i) = 0 for every i.
struct WronskiInstance {
    Field field;
    int m = 0, p = 0;
    Chart chart;
    std::vector<Scalar> s_list;
    Subspace w;

    WronskiInstance(Field k, int m_, int p_, Chart chart_, std::vector<Scalar> s, Subspace w_);

    [[nodiscard]] std::string str() const;
};

} // namespace wrgw

#endif
