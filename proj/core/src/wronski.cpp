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

#include "wrgw/wronski.hpp"

#include <sstream>

#include "wrgw/flags.hpp"

namespace wrgw {

Poly wronskian(const std::vector<Poly>& fs) {
    if (fs.empty()) throw std::invalid_argument("wronskian: no polynomials");
    const Field& k = fs.front().field();
    const std::size_t m = fs.size();
    PolyMatrix mtx(k, m, m);
    std::vector<Poly> row = fs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) mtx.set(i, j, row[j]);
        if (i + 1 < m)
            for (auto& f : row) f = f.derivative();
    }
    return mtx.det();
}

Poly wronskian(const Subspace& w) {
    std::vector<Poly> fs;
    fs.reserve(static_cast<std::size_t>(w.plane_dim()));
    for (int i = 0; i < w.plane_dim(); ++i) fs.push_back(w.row_poly(static_cast<std::size_t>(i)));
    return wronskian(fs);
}

ScalarMatrix gamma_matrix(const Scalar& s, int m, int p) {
    const Field& k = s.field();
    const int n = m + p;
    ScalarMatrix g(k, static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        Poly col = rational_normal_derivative(s, j, n);
        for (int r = 0; r < n; ++r)
            g.set(static_cast<std::size_t>(r), static_cast<std::size_t>(j),
                  col.coeff(static_cast<unsigned>(r)));
    }
    return g;
}

Scalar wr_via_gamma(const ScalarMatrix& coeffs, const Scalar& s) {
    const std::size_t m = coeffs.rows();
    const std::size_t n = coeffs.cols();
    if (n < m) throw std::invalid_argument("wr_via_gamma: matrix must be m x (m+p)");
    ScalarMatrix g = gamma_matrix(s, static_cast<int>(m), static_cast<int>(n - m));
    return (coeffs * g).det();
}

Scalar wronski_scale(const Field& k, int m) {
    Scalar acc(k, 1);
    Scalar fact(k, 1);
    for (int i = 1; i <= m - 1; ++i) {
        fact *= Scalar(k, i);
        acc *= fact;
    }
    return acc;
}

bool in_big_cell(const Subspace& w, int m, int p) {
    if (w.plane_dim() != m || w.ambient_dim() != m + p)
        throw std::invalid_argument("in_big_cell: dimension mismatch");
    return wronskian(w).degree() == m * p;
}

std::vector<Scalar> section_values(const Subspace& w, const std::vector<Scalar>& s_list) {
    Poly wr = wronskian(w);
    std::vector<Scalar> out;
    out.reserve(s_list.size());
    for (const auto& s : s_list) out.push_back(wr.eval(s));
    return out;
}

// ---------------------------------------------------------------------------

LocalSection::LocalSection(Chart chart, std::vector<Scalar> s_list)
    : chart_(std::move(chart)), s_(std::move(s_list)) {
    if (s_.size() != static_cast<std::size_t>(chart_.m() * chart_.p()))
        throw std::invalid_argument("LocalSection: need mp scalars");
}

std::vector<Scalar> LocalSection::operator()(const ScalarMatrix& x) const {
    Poly wr = wronskian(chart_.moving_rows(x));
    std::vector<Scalar> out;
    out.reserve(s_.size());
    for (const auto& s : s_) out.push_back(wr.eval(s));
    return out;
}

Scalar LocalSection::partial_at_zero(int gamma, int k, int l) const {
    const Field& kk = chart_.field();
    const int m = chart_.m(), p = chart_.p();
    if (gamma < 1 || gamma > m || k < 1 || k > p)
        throw std::out_of_range("LocalSection::partial_at_zero: index");
    const Scalar& s = s_.at(static_cast<std::size_t>(l));
    // Entries of the Wronski matrix at s with x_{gamma,k} = eps become
    // degree <= 1 polynomials in eps; expand that determinant and read the
    // linear coefficient.
    PolyMatrix mtx(kk, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {          // derivative order
        for (int j = 1; j <= m; ++j) {     // moving row index
            Scalar base = chart_.basis_poly(p + j - 1).derivative(static_cast<unsigned>(i)).eval(s);
            if (j == gamma) {
                Scalar lin = chart_.basis_poly(k - 1).derivative(static_cast<unsigned>(i)).eval(s);
                mtx.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1),
                        Poly(kk, {base, lin}));
            } else {
                mtx.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1),
                        Poly::constant(base));
            }
        }
    }
    return mtx.det().coeff(1);
}

// ---------------------------------------------------------------------------

std::vector<Scalar> scale_map_V(int m, int p, const std::vector<Scalar>& v) {
    if (v.size() != static_cast<std::size_t>(m * p))
        throw std::invalid_argument("scale_map_V: vector length must be mp");
    Scalar c = wronski_scale(v.front().field(), m);
    std::vector<Scalar> out = v;
    for (auto& e : out) e *= c;
    return out;
}

std::vector<Scalar> ev_map(const std::vector<Scalar>& s_list, const std::vector<Scalar>& coeffs) {
    if (coeffs.size() != s_list.size())
        throw std::invalid_argument("ev_map: coefficient vector length must be mp");
    const Field& k = s_list.front().field();
    Poly g(k, coeffs);
    std::vector<Scalar> out;
    out.reserve(s_list.size());
    for (const auto& s : s_list) out.push_back(g.eval(s));
    return out;
}

std::vector<Scalar> tr_map(const std::vector<Scalar>& s_list, int m, int p, const std::vector<Scalar>& v) {
    if (v.size() != s_list.size())
        throw std::invalid_argument("tr_map: vector length must be mp");
    Scalar c = wronski_scale(s_list.front().field(), m);
    std::vector<Scalar> out = v;
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] += c * s_list[j].pow(m * p);
    return out;
}

ScalarMatrix ev_jacobian(const std::vector<Scalar>& s_list) {
    const Field& k = s_list.front().field();
    const std::size_t n = s_list.size();
    ScalarMatrix jac(k, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Scalar pw(k, 1);
        for (std::size_t i = 0; i < n; ++i) {
            jac.set(j, i, pw);
            pw *= s_list[j];
        }
    }
    return jac;
}

// ---------------------------------------------------------------------------

WronskiInstance::WronskiInstance(Field k, int m_, int p_, Chart chart_arg,
                                 std::vector<Scalar> s, Subspace w_)
    : field(k), m(m_), p(p_), chart(std::move(chart_arg)), s_list(std::move(s)), w(std::move(w_)) {
    if (!factorial_invertible(static_cast<unsigned>(m + p - 1), field))
        throw std::invalid_argument("WronskiInstance: (m+p-1)! not invertible in " + field.str());
    if (s_list.size() != static_cast<std::size_t>(m * p))
        throw std::invalid_argument("WronskiInstance: need mp scalars");
    for (std::size_t i = 0; i < s_list.size(); ++i)
        for (std::size_t j = i + 1; j < s_list.size(); ++j)
            if (s_list[i] == s_list[j])
                throw std::invalid_argument("WronskiInstance: s_list entries must be pairwise distinct");
    if (!in_big_cell(w, m, p))
        throw std::invalid_argument("WronskiInstance: W is not in the big open cell");
    for (const auto& v : section_values(w, s_list))
        if (!v.is_zero())
            throw std::invalid_argument("WronskiInstance: Wr(W) does not vanish on s_list");
}

std::string WronskiInstance::str() const {
    std::ostringstream out;
    out << field.str() << " Gr(" << m << "," << m + p << ") s = {";
    for (std::size_t i = 0; i < s_list.size(); ++i) {
        if (i) out << ", ";
        out << s_list[i].str();
    }
    out << "}";
    return out.str();
}

} // namespace wrgw
