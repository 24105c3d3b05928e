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

#ifndef WRGW_FLAGS_HPP
#define WRGW_FLAGS_HPP

#include "wrgw/subspace.hpp"

namespace wrgw {

/// gamma^{(j)}(s) as a polynomial: sum_{r=j}^{n-1} r!/(r-j)! s^{r-j} t^r,
/// with gamma the rational normal curve (1, s, s^2, ...), n = m+p.
[[nodiscard]] Poly rational_normal_derivative(const Scalar& s, int j, int n);

/// Osculating i-plane F_i(s) = span{gamma(s), gamma'(s), ..., gamma^{(i-1)}(s)}
/// in k_{m+p-1}[t]; full rank for every s.
[[nodiscard]] Subspace osculating_F(const Scalar& s, int i, int m, int p);

/// E_i(s) = span{(t-s)^{m+p-1}, ..., (t-s)^{m+p-i}}: the polynomials
/// vanishing at s to order >= m+p-i.
[[nodiscard]] Subspace flag_E(const Scalar& s, int i, int m, int p);

} // namespace wrgw

#endif
