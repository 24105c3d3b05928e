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

#include "wrgw/tableaux.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wrgw {

namespace {

mpz_class factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

} // namespace

mpz_class n_complex(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("n_complex: m, p must be >= 1");
    mpz_class num = factorial(static_cast<long>(m) * p);
    for (int i = 1; i <= p - 1; ++i) num *= factorial(i);
    mpz_class den = 1;
    for (int i = m; i <= m + p - 1; ++i) den *= factorial(i);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

mpz_class syt_count(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("syt_count: m, p must be >= 1");
    // hook of cell (i, j) in the m x p rectangle: (m - i) + (p - j) + 1, 1-based
    mpz_class hooks = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= p; ++j)
            hooks *= (m - i) + (p - j) + 1;
    mpz_class q;
    mpz_class num = factorial(static_cast<long>(m) * p);
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
    return q;
}

namespace {

void syt_rec(std::vector<int>& filled, int total, std::uint64_t& count, int p) {
    int placed = 0;
    for (int f : filled) placed += f;
    if (placed == total) { ++count; return; }
    for (std::size_t r = 0; r < filled.size(); ++r) {
        if (filled[r] == p) continue;
        if (r > 0 && filled[r] >= filled[r - 1]) continue; // column constraint
        ++filled[r];
        syt_rec(filled, total, count, p);
        --filled[r];
    }
}

} // namespace

std::uint64_t syt_count_brute(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("syt_count_brute: m, p must be >= 1");
    if (m * p > 16) throw std::invalid_argument("syt_count_brute: shape too large");
    std::vector<int> filled(static_cast<std::size_t>(m), 0);
    std::uint64_t count = 0;
    syt_rec(filled, m * p, count, p);
    return count;
}

mpz_class n_real(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("n_real: m, p must be >= 1");
    if ((m + p) % 2 == 0) return 0;
    if (p > m + 1) return n_real(p, m);
    // all factorial arguments are >= 0 here (m - p + 1 >= 0, m + p odd)
    mpz_class num = 1;
    for (int i = 1; i <= p - 1; ++i) num *= factorial(i);
    for (int i = m - p + 1; i <= m - 1; ++i) num *= factorial(i);
    num *= factorial(static_cast<long>(m) * p / 2);
    mpz_class den = 1;
    for (int i = m - p + 2; i <= m + p - 2; i += 2) den *= factorial(i);
    for (int i = (m - p + 1) / 2; i <= (m + p - 1) / 2; ++i) den *= factorial(i);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::string render_count_tables(int max_m, int max_p) {
    std::ostringstream out;
    auto table = [&](const char* title, auto&& fn) {
        out << title << " (rows p, columns m)\n";
        out << std::setw(6) << "p\\m";
        for (int m = 2; m <= max_m; ++m) out << std::setw(12) << m;
        out << "\n";
        for (int p = 2; p <= max_p; ++p) {
            out << std::setw(6) << p;
            for (int m = 2; m <= max_m; ++m)
                out << std::setw(12) << fn(m, p).get_str();
            out << "\n";
        }
    };
    table("n_C", [](int m, int p) { return n_complex(m, p); });
    out << "\n";
    table("n_R", [](int m, int p) { return n_real(m, p); });
    return out.str();
}

} // namespace wrgw
