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

#ifndef WRGW_SUBSPACE_HPP
#define WRGW_SUBSPACE_HPP

#include "wrgw/matrix.hpp"
#include "wrgw/multiindex.hpp"
#include "wrgw/poly.hpp"

namespace wrgw {

/// A plane in k_{n-1}[t] as the row space of a spanning matrix in the
/// monomial basis 1, t, ..., t^{n-1}. Full row rank is checked at
/// construction. Plucker data is only defined up to a global scale across
/// different spanning matrices of the same plane; callers needing
/// scale-invariance compare by proportionality.
class Subspace {
public:
    explicit Subspace(ScalarMatrix basis);
    static Subspace from_polys(const std::vector<Poly>& gens, int ambient_dim);

    [[nodiscard]] const Field& field() const { return basis_.field(); }
    [[nodiscard]] int ambient_dim() const { return static_cast<int>(basis_.cols()); }
    [[nodiscard]] int plane_dim() const { return static_cast<int>(basis_.rows()); }
    [[nodiscard]] const ScalarMatrix& basis() const { return basis_; }
    [[nodiscard]] Poly row_poly(std::size_t i) const;

    /// Plucker coordinate z_alpha: the minor of the spanning matrix at the
    /// columns of alpha. length(alpha) must equal plane_dim.
    [[nodiscard]] Scalar plucker(const MultiIndex& alpha) const;

    /// All Plucker coordinates, in the order of MultiIndex::all.
    [[nodiscard]] std::vector<Scalar> plucker_vector() const;

    /// Same plane (row spaces equal)?
    [[nodiscard]] bool same_space(const Subspace& o) const;

private:
    ScalarMatrix basis_;
};

/// The p-plane annihilated by an m-plane of covectors (coefficient rows in
/// the dual monomial basis, pairing = coefficient dot product).
/// Throws on rank deficiency.
[[nodiscard]] Subspace annihilator(const Subspace& wstar);

/// True iff the two planes meet nontrivially (rank of stacked bases drops).
[[nodiscard]] bool intersects_nontrivially(const Subspace& a, const Subspace& b);

/// The apolarity involution t^r -> (-1)^{n-1-r} C(n-1,r) t^{n-1-r} applied
/// to each spanning row. Maps the osculating flag F_i(s) onto E_i(s) for
/// every s; annihilator followed by apolar transports Wronski instances
/// between Gr(m,m+p) and Gr(p,m+p) with the same root list.
[[nodiscard]] Subspace apolar(const Subspace& w);

/// Projective equality of coordinate vectors: u ~ v iff u_i v_j = u_j v_i
/// for all i, j and neither is identically zero.
[[nodiscard]] bool proportional(const std::vector<Scalar>& u, const std::vector<Scalar>& v);

} // namespace wrgw

#endif
