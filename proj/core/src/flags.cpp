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

#include "wrgw/flags.hpp"

namespace wrgw {

Poly rational_normal_derivative(const Scalar& s, int j, int n) {
    const Field& k = s.field();
    std::vector<Scalar> coeffs(static_cast<std::size_t>(n), Scalar(k));
    for (int r = j; r < n; ++r) {
        // falling factorial r!/(r-j)!
        Scalar c(k, 1);
        for (int d = 0; d < j; ++d) c *= Scalar(k, r - d);
        coeffs[static_cast<std::size_t>(r)] = c * s.pow(r - j);
    }
    return Poly(k, std::move(coeffs));
}

Subspace osculating_F(const Scalar& s, int i, int m, int p) {
    const int n = m + p;
    if (i < 1 || i > n) throw std::out_of_range("osculating_F: plane dimension out of range");
    std::vector<Poly> gens;
    gens.reserve(static_cast<std::size_t>(i));
    for (int j = 0; j < i; ++j) gens.push_back(rational_normal_derivative(s, j, n));
    return Subspace::from_polys(gens, n);
}

Subspace flag_E(const Scalar& s, int i, int m, int p) {
    const int n = m + p;
    if (i < 1 || i > n) throw std::out_of_range("flag_E: plane dimension out of range");
    const Field& k = s.field();
    Poly lin(k, {-s, Scalar(k, 1)});
    std::vector<Poly> powers;   // powers[e] = (t-s)^e
    powers.reserve(static_cast<std::size_t>(n));
    Poly cur = Poly::constant(Scalar(k, 1));
    for (int e = 0; e < n; ++e) {
        powers.push_back(cur);
        cur = cur * lin;
    }
    std::vector<Poly> gens;
    gens.reserve(static_cast<std::size_t>(i));
    for (int e = n - 1; e >= n - i; --e) gens.push_back(powers[static_cast<std::size_t>(e)]);
    return Subspace::from_polys(gens, n);
}

} // namespace wrgw
