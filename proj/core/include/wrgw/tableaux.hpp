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

#ifndef WRGW_TABLEAUX_HPP
#define WRGW_TABLEAUX_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace wrgw {

/// Number of m-planes meeting mp general p-planes in (m+p)-space:
/// 1! 2! ... (p-1)! (mp)! / ( m! (m+1)! ... (m+p-1)! ). Exact.
[[nodiscard]] mpz_class n_complex(int m, int p);

/// Number of standard Young tableaux of the m x p rectangle, by the
/// hook-length product. Independent oracle for n_complex.
[[nodiscard]] mpz_class syt_count(int m, int p);

/// Brute-force SYT enumeration (backtracking); use for m*p <= 10.
[[nodiscard]] std::uint64_t syt_count_brute(int m, int p);

/// Degree of the real Wronski: 0 when m+p is even, otherwise the factorial
/// quotient; evaluated as written when its factorial arguments are all
/// nonnegative (p <= m+1) and through n_real(p, m) otherwise.
[[nodiscard]] mpz_class n_real(int m, int p);

/// Both count tables, rows p = 2..max_p, columns m = 2..max_m, matching the
/// reference layout.
[[nodiscard]] std::string render_count_tables(int max_m, int max_p);

} // namespace wrgw

#endif
