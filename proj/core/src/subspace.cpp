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

#include "wrgw/subspace.hpp"

namespace wrgw {

Subspace::Subspace(ScalarMatrix basis) : basis_(std::move(basis)) {
    if (basis_.rows() > basis_.cols())
        throw std::invalid_argument("Subspace: more generators than ambient dimension");
    if (basis_.rank() != basis_.rows())
        throw std::invalid_argument("Subspace: spanning matrix is rank deficient");
}

Subspace Subspace::from_polys(const std::vector<Poly>& gens, int ambient_dim) {
    if (gens.empty()) throw std::invalid_argument("Subspace::from_polys: no generators");
    const Field& k = gens.front().field();
    ScalarMatrix m(k, gens.size(), static_cast<std::size_t>(ambient_dim));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree() >= ambient_dim)
            throw std::invalid_argument("Subspace::from_polys: generator degree exceeds ambient");
        for (int j = 0; j <= gens[i].degree(); ++j)
            m.set(i, static_cast<std::size_t>(j), gens[i].coeff(static_cast<unsigned>(j)));
    }
    return Subspace(std::move(m));
}

Poly Subspace::row_poly(std::size_t i) const {
    std::vector<Scalar> cs;
    cs.reserve(basis_.cols());
    for (std::size_t j = 0; j < basis_.cols(); ++j) cs.push_back(basis_.at(i, j));
    return Poly(field(), std::move(cs));
}

Scalar Subspace::plucker(const MultiIndex& alpha) const {
    if (alpha.ambient() != ambient_dim())
        throw std::invalid_argument("Subspace::plucker: multiindex ambient mismatch");
    if (static_cast<int>(alpha.length()) != plane_dim())
        throw std::invalid_argument("Subspace::plucker: multiindex length must equal plane dimension");
    std::vector<std::size_t> rows(basis_.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return basis_.submatrix(rows, alpha.zero_based()).det();
}

std::vector<Scalar> Subspace::plucker_vector() const {
    std::vector<Scalar> out;
    for (const MultiIndex& a : MultiIndex::all(ambient_dim(), plane_dim()))
        out.push_back(plucker(a));
    return out;
}

bool Subspace::same_space(const Subspace& o) const {
    if (ambient_dim() != o.ambient_dim() || plane_dim() != o.plane_dim()) return false;
    return basis_.stacked(o.basis_).rank() == basis_.rows();
}

Subspace annihilator(const Subspace& wstar) {
    auto kernel = wstar.basis().nullspace();
    if (kernel.empty()) throw std::invalid_argument("annihilator: full-rank pairing has trivial kernel");
    return Subspace(ScalarMatrix::from_rows(wstar.field(), kernel));
}

bool intersects_nontrivially(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersects_nontrivially: ambient dimension mismatch");
    std::size_t r = a.basis().stacked(b.basis()).rank();
    return r < static_cast<std::size_t>(a.plane_dim() + b.plane_dim());
}

Subspace apolar(const Subspace& w) {
    const Field& k = w.field();
    const int n = w.ambient_dim();
    // binomials C(n-1, r) as field elements
    std::vector<Scalar> binom(static_cast<std::size_t>(n), Scalar(k, 1));
    for (int r = 1; r < n; ++r)
        binom[static_cast<std::size_t>(r)] =
            binom[static_cast<std::size_t>(r - 1)] * Scalar(k, n - r) / Scalar(k, r);
    ScalarMatrix out(k, static_cast<std::size_t>(w.plane_dim()), static_cast<std::size_t>(n));
    for (int i = 0; i < w.plane_dim(); ++i)
        for (int r = 0; r < n; ++r) {
            Scalar v = w.basis().at(static_cast<std::size_t>(i), static_cast<std::size_t>(r)) *
                       binom[static_cast<std::size_t>(r)];
            if ((n - 1 - r) % 2) v = -v;
            out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(n - 1 - r), v);
        }
    return Subspace(std::move(out));
}

bool proportional(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    if (u.size() != v.size() || u.empty()) return false;
    bool u_zero = true, v_zero = true;
    for (const auto& x : u) u_zero = u_zero && x.is_zero();
    for (const auto& x : v) v_zero = v_zero && x.is_zero();
    if (u_zero || v_zero) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

} // namespace wrgw
