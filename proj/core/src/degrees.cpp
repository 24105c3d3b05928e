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

#include "wrgw/degrees.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <thread>

#include "wrgw/rng.hpp"

namespace wrgw {

Chart adapt_basis(const Subspace& w) {
    const Field& k = w.field();
    const int m = w.plane_dim();
    const int n = w.ambient_dim();
    const int p = n - m;
    if (p < 1) throw std::invalid_argument("adapt_basis: ambient must exceed plane dimension");

    // echelonize from the high-degree side; rref reports pivot columns in
    // discovery order, so row r carries the r-th discovered pivot
    ScalarMatrix basis = w.basis();
    std::vector<std::size_t> order;
    for (int c = n - 1; c >= 0; --c) order.push_back(static_cast<std::size_t>(c));
    std::vector<std::size_t> pivots = basis.rref(order);

    std::vector<std::size_t> row_of(static_cast<std::size_t>(n), 0);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        row_of[pivots[r]] = r;
    }

    std::vector<Poly> e;
    e.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)])
            e.push_back(Poly::monomial(k, static_cast<unsigned>(c)));
    // W rows by pivot column, ascending
    for (int c = 0; c < n; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) continue;
        std::size_t r = row_of[static_cast<std::size_t>(c)];
        std::vector<Scalar> cs;
        cs.reserve(static_cast<std::size_t>(n));
        for (std::size_t j = 0; j < basis.cols(); ++j) cs.push_back(basis.at(r, j));
        e.push_back(Poly(k, std::move(cs)));
    }
    return Chart(m, p, std::move(e));
}

ScalarMatrix local_jacobian(const Chart& chart, const std::vector<Scalar>& s_list) {
    const int m = chart.m(), p = chart.p();
    const std::size_t mp = static_cast<std::size_t>(m) * static_cast<std::size_t>(p);
    if (s_list.size() != mp) throw std::invalid_argument("local_jacobian: need mp scalars");
    LocalSection sec(chart, s_list);
    ScalarMatrix jac(chart.field(), mp, mp);
    for (int gamma = 1; gamma <= m; ++gamma)
        for (int k = 1; k <= p; ++k) {
            std::size_t row = static_cast<std::size_t>((gamma - 1) * p + (k - 1));
            for (std::size_t l = 0; l < mp; ++l)
                jac.set(row, l, sec.partial_at_zero(gamma, k, static_cast<int>(l)));
        }
    return jac;
}

Scalar jacobian_det_at_zero(const Chart& chart, const std::vector<Scalar>& s_list) {
    Poly wr = wronskian(chart.center());
    for (const auto& s : s_list)
        if (!wr.eval(s).is_zero())
            throw NotAZeroError("jacobian_det_at_zero: chart center is not a zero of the section");
    return local_jacobian(chart, s_list).det();
}

ScalarMatrix matrix_B(const Chart& chart, const std::vector<Scalar>& s_list) {
    const int m = chart.m(), p = chart.p();
    const std::size_t mp = static_cast<std::size_t>(m) * static_cast<std::size_t>(p);
    if (s_list.size() != mp) throw std::invalid_argument("matrix_B: need mp scalars");
    ScalarMatrix b(chart.field(), mp, mp);
    for (int gamma = 1; gamma <= m; ++gamma)
        for (int k = 1; k <= p; ++k) {
            std::vector<Poly> fs;
            fs.reserve(static_cast<std::size_t>(m));
            fs.push_back(chart.basis_poly(k - 1));
            for (int a = 1; a <= m; ++a)
                if (a != gamma) fs.push_back(chart.basis_poly(p + a - 1));
            Poly wr = wronskian(fs);
            std::size_t row = static_cast<std::size_t>((gamma - 1) * p + (k - 1));
            for (std::size_t l = 0; l < mp; ++l)
                b.set(row, l, wr.eval(s_list[l]));
        }
    return b;
}

namespace {

int sign_exponent(int m, int p) { return (m * (m - 1) / 2) * p; }

} // namespace

Scalar constant_C(int m, int p, const std::vector<Scalar>& s_list) {
    if (s_list.size() != static_cast<std::size_t>(m * p))
        throw std::invalid_argument("constant_C: need mp scalars");
    const Field& k = s_list.front().field();
    Scalar c = vandermonde(s_list) * wronski_scale(k, m).pow(m * p);
    if (sign_exponent(m, p) % 2) c = -c;
    return c;
}

LocalIndexReport local_degree(const Subspace& w, const std::vector<Scalar>& s_list) {
    const Field& k = w.field();
    const int m = w.plane_dim();
    const int p = w.ambient_dim() - m;
    Chart chart = adapt_basis(w);
    Poly wr = wronskian(chart.center());
    for (const auto& s : s_list)
        if (!wr.eval(s).is_zero())
            throw NotAZeroError("local_degree: W is not in the fiber over prod (t - s_i)");

    Scalar jac_det = local_jacobian(chart, s_list).det();
    if (jac_det.is_zero())
        throw NonSimpleZeroError(
            "local_degree: W is a non-simple zero; degrees at non-simple zeros are unsupported");
    Scalar det_b = matrix_B(chart, s_list).det();
    Scalar c = constant_C(m, p, s_list);

    Scalar v = vandermonde(s_list);
    Scalar direct_gen = v * wronski_scale(k, m).pow(m * p) * jac_det;
    Scalar formula_gen = c * det_b;

    Scalar signed_det_b = (sign_exponent(m, p) % 2) ? -det_b : det_b;

    LocalIndexReport rep{
        w,
        jac_det,
        det_b,
        c,
        GWClass::rank_one(direct_gen),
        GWClass::rank_one(formula_gen),
        same_square_class(direct_gen, formula_gen),
        jac_det == signed_det_b,
    };
    return rep;
}

// ---------------------------------------------------------------------------
// fast modular chart scans (internal). Cross-checked against the generic
// exact path in the unit tests.

namespace {

struct FpTables {
    std::int64_t p;
    int m, pp;                  // plane dim, chart width
    std::vector<std::int64_t> pts;             // evaluation points
    // head[l][i*m + j]  = (t^{pp+j})^{(i)} (pts[l])
    // tail[l][i*pp + k] = (t^k)^{(i)} (pts[l])
    std::vector<std::vector<std::int64_t>> head, tail;

    FpTables(const Field& k, int m_, int pp_, const std::vector<std::int64_t>& points)
        : p(k.characteristic()), m(m_), pp(pp_), pts(points) {
        if (m > 4 || pp > 7)
            throw std::invalid_argument("modular chart scan supports m <= 4, p <= 7");
        head.resize(pts.size());
        tail.resize(pts.size());
        for (std::size_t l = 0; l < pts.size(); ++l) {
            head[l].assign(static_cast<std::size_t>(m * m), 0);
            tail[l].assign(static_cast<std::size_t>(m * pp), 0);
            Scalar s(k, static_cast<long>(pts[l]));
            for (int j = 0; j < m; ++j) {
                Poly f = Poly::monomial(k, static_cast<unsigned>(pp + j));
                for (int i = 0; i < m; ++i)
                    head[l][static_cast<std::size_t>(i * m + j)] =
                        f.derivative(static_cast<unsigned>(i)).eval(s).residue();
            }
            for (int kk = 0; kk < pp; ++kk) {
                Poly f = Poly::monomial(k, static_cast<unsigned>(kk));
                for (int i = 0; i < m; ++i)
                    tail[l][static_cast<std::size_t>(i * pp + kk)] =
                        f.derivative(static_cast<unsigned>(i)).eval(s).residue();
            }
        }
    }

    // Wronski value at pts[l] for chart coordinates x (row-major m x pp).
    std::int64_t value(std::size_t l, const std::int64_t* x) const {
        std::array<std::int64_t, 16> e{};
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                std::int64_t acc = head[l][static_cast<std::size_t>(i * m + j)];
                const std::int64_t* xr = x + j * pp;
                const std::int64_t* tv = tail[l].data() + i * pp;
                for (int kk = 0; kk < pp; ++kk) acc += xr[kk] * tv[kk] % p;
                e[static_cast<std::size_t>(i * m + j)] = acc % p;
            }
        return det_small(e.data());
    }

    std::int64_t det_small(const std::int64_t* e) const {
        auto md = [&](std::int64_t v) { v %= p; return v < 0 ? v + p : v; };
        if (m == 1) return md(e[0]);
        if (m == 2) return md(e[0] * e[3] % p - e[1] * e[2] % p);
        if (m == 3) {
            std::int64_t d = e[0] * md(e[4] * e[8] % p - e[5] * e[7] % p) % p;
            d -= e[1] * md(e[3] * e[8] % p - e[5] * e[6] % p) % p;
            d += e[2] * md(e[3] * e[7] % p - e[4] * e[6] % p) % p;
            return md(d);
        }
        // generic small elimination (m <= 4 in practice)
        std::array<std::int64_t, 16> a{};
        for (int i = 0; i < m * m; ++i) a[static_cast<std::size_t>(i)] = md(e[i]);
        std::int64_t det = 1;
        for (int c = 0; c < m; ++c) {
            int piv = -1;
            for (int r = c; r < m; ++r)
                if (a[static_cast<std::size_t>(r * m + c)] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            if (piv != c) {
                for (int j = 0; j < m; ++j)
                    std::swap(a[static_cast<std::size_t>(piv * m + j)], a[static_cast<std::size_t>(c * m + j)]);
                det = p - det;
            }
            std::int64_t d = a[static_cast<std::size_t>(c * m + c)];
            det = det * d % p;
            std::int64_t inv = inv_mod(d);
            for (int r = c + 1; r < m; ++r) {
                std::int64_t f = a[static_cast<std::size_t>(r * m + c)] * inv % p;
                if (!f) continue;
                for (int j = c; j < m; ++j)
                    a[static_cast<std::size_t>(r * m + j)] =
                        md(a[static_cast<std::size_t>(r * m + j)] - f * a[static_cast<std::size_t>(c * m + j)]);
            }
        }
        return det % p;
    }

    std::int64_t inv_mod(std::int64_t a) const {
        std::int64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }
};

ScalarMatrix x_matrix_from_raw(const Field& k, int m, int pp, const std::int64_t* x) {
    ScalarMatrix mx(k, static_cast<std::size_t>(m), static_cast<std::size_t>(pp));
    for (int g = 0; g < m; ++g)
        for (int kk = 0; kk < pp; ++kk)
            mx.set(static_cast<std::size_t>(g), static_cast<std::size_t>(kk),
                   Scalar(k, static_cast<long>(x[g * pp + kk])));
    return mx;
}

} // namespace

std::vector<Subspace> fiber_enumerate(const Field& k, int m, int p,
                                      const std::vector<Scalar>& s_list, std::uint64_t budget) {
    if (!k.is_prime_field())
        throw std::invalid_argument("fiber_enumerate: finite fields only");
    const std::uint64_t q = k.characteristic();
    const int mp = m * p;
    if (s_list.size() != static_cast<std::size_t>(mp))
        throw std::invalid_argument("fiber_enumerate: need mp scalars");
    std::uint64_t total = 1;
    for (int i = 0; i < mp; ++i) {
        if (total > budget / q + 1) throw BudgetExceededError("fiber_enumerate: p^{mp} exceeds budget");
        total *= q;
    }
    if (total > budget) throw BudgetExceededError("fiber_enumerate: p^{mp} exceeds budget");

    std::vector<std::int64_t> pts;
    pts.reserve(s_list.size());
    for (const auto& s : s_list) pts.push_back(s.residue());
    FpTables tab(k, m, p, pts);

    // the scan is pure in (chart, s_list): partition the index space across
    // threads and merge the per-block hits in block order, which reproduces
    // the serial enumeration order exactly
    unsigned nthreads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (total < 65536) nthreads = 1;
    std::vector<std::vector<std::uint64_t>> hits(nthreads);
    auto scan_block = [&](unsigned t) {
        std::vector<std::int64_t> x(static_cast<std::size_t>(mp), 0);
        const std::uint64_t base = total / nthreads, rem = total % nthreads;
        std::uint64_t lo = t * base + std::min<std::uint64_t>(t, rem);
        std::uint64_t hi = lo + base + (t < rem ? 1 : 0);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::uint64_t v = idx;
            for (int i = 0; i < mp; ++i) {
                x[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(v % q);
                v /= q;
            }
            bool zero = true;
            for (std::size_t l = 0; l < pts.size() && zero; ++l)
                zero = tab.value(l, x.data()) == 0;
            if (zero) hits[t].push_back(idx);
        }
    };
    if (nthreads == 1) {
        scan_block(0);
    } else {
        std::vector<std::thread> pool_threads;
        for (unsigned t = 0; t < nthreads; ++t) pool_threads.emplace_back(scan_block, t);
        for (auto& th : pool_threads) th.join();
    }

    Chart chart = Chart::standard(k, m, p);
    std::vector<Subspace> out;
    std::vector<std::int64_t> x(static_cast<std::size_t>(mp), 0);
    for (unsigned t = 0; t < nthreads; ++t)
        for (std::uint64_t idx : hits[t]) {
            std::uint64_t v = idx;
            for (int i = 0; i < mp; ++i) {
                x[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(v % q);
                v /= q;
            }
            Subspace w = chart.point(x_matrix_from_raw(k, m, p, x.data()));
            // guard the fast path with the generic evaluator
            for (const auto& val : section_values(w, s_list))
                if (!val.is_zero())
                    throw std::logic_error("fiber_enumerate: fast path disagrees with exact evaluation");
            out.push_back(std::move(w));
        }
    return out;
}

// ---------------------------------------------------------------------------
// samplers

namespace {

std::optional<WronskiInstance> finalize_candidate(const Field& k, int m, int p,
                                                  const ScalarMatrix& x,
                                                  const SampleOptions& opts) {
    Chart chart = Chart::standard(k, m, p);
    Subspace w = chart.point(x);
    Poly wr = wronskian(w);
    auto roots = split_distinct_roots(wr);
    if (!roots) return std::nullopt;
    if (opts.require_simple) {
        Scalar jd = local_jacobian(adapt_basis(w), *roots).det();
        if (jd.is_zero()) return std::nullopt;
    }
    return WronskiInstance(k, m, p, std::move(chart), std::move(*roots), std::move(w));
}

// --- F_p: random stage ---

std::optional<WronskiInstance> sample_fp_random(const Field& k, int m, int p,
                                                const SampleOptions& opts, SplitMix64& rng) {
    const std::int64_t q = k.characteristic();
    const int mp = m * p;
    std::vector<std::int64_t> pts(static_cast<std::size_t>(q));
    std::iota(pts.begin(), pts.end(), 0);
    FpTables tab(k, m, p, pts);
    std::vector<std::int64_t> x(static_cast<std::size_t>(mp));
    for (int draw = 0; draw < opts.random_budget; ++draw) {
        for (auto& v : x) v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(q)));
        int zeros = 0;
        bool feasible = true;
        for (std::size_t l = 0; l < pts.size(); ++l) {
            if (tab.value(l, x.data()) == 0) ++zeros;
            // too many nonroots already?
            if (static_cast<int>(l) + 1 - zeros > static_cast<int>(q) - mp) { feasible = false; break; }
        }
        if (!feasible || zeros != mp) continue;
        auto inst = finalize_candidate(k, m, p, x_matrix_from_raw(k, m, p, x.data()), opts);
        if (inst) return inst;
    }
    return std::nullopt;
}

// --- F_p: normalized scan (roots forced to contain {0,1}) ---

std::optional<WronskiInstance> sample_fp_normalized(const Field& k, int m, int p,
                                                    const SampleOptions& opts, SplitMix64& rng) {
    if (m > 3 || p > 7) return std::nullopt;  // cofactor solver covers the desk shapes
    const std::int64_t q = k.characteristic();
    const int mp = m * p;
    std::vector<std::int64_t> pts(static_cast<std::size_t>(q));
    std::iota(pts.begin(), pts.end(), 0);
    FpTables tab(k, m, p, pts);

    const int tail_coords = (m - 1) * p;
    std::uint64_t space = 1;
    for (int i = 0; i < tail_coords; ++i) space *= static_cast<std::uint64_t>(q);
    std::uint64_t start = rng.below(space);
    std::uint64_t limit = std::min<std::uint64_t>(space, opts.scan_budget);

    // F(s; x1) = c0(s) + sum_k ck(s) x1k via cofactor expansion along the
    // column of the first moving row; the cofactors depend only on the tail
    // rows, so they are computed once per tail candidate and reused both for
    // the two root conditions and for the root count of every solution.
    std::vector<std::array<std::int64_t, 8>> lin_at(static_cast<std::size_t>(q));
    std::vector<std::array<std::int64_t, 8>> sols_buffer;
    std::vector<bool> lin_built(static_cast<std::size_t>(q), false);
    std::vector<std::int64_t> x(static_cast<std::size_t>(mp), 0);
    for (std::uint64_t step = 0; step < limit; ++step) {
        std::uint64_t idx = (start + step) % space;
        for (int i = 0; i < tail_coords; ++i) {
            x[static_cast<std::size_t>(p + i)] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(q));
            idx /= static_cast<std::uint64_t>(q);
        }
        auto build_lin = [&](std::size_t l) {
            std::array<std::int64_t, 16> cols{};
            for (int i = 0; i < m; ++i)
                for (int j = 1; j < m; ++j) {
                    std::int64_t acc = tab.head[l][static_cast<std::size_t>(i * m + j)];
                    for (int kk = 0; kk < p; ++kk)
                        acc += x[static_cast<std::size_t>(j * p + kk)] *
                               tab.tail[l][static_cast<std::size_t>(i * p + kk)];
                    cols[static_cast<std::size_t>(i * m + j)] = acc % q;
                }
            auto& lin = lin_at[l];
            lin.fill(0);
            for (int i = 0; i < m; ++i) {
                std::int64_t cof;
                if (m == 1) {
                    cof = 1;
                } else if (m == 2) {
                    cof = cols[static_cast<std::size_t>((1 - i) * m + 1)];
                } else {  // m == 3: 2x2 minor of the other two rows, columns 1..2
                    int r1 = (i == 0) ? 1 : 0;
                    int r2 = (i == 2) ? 1 : 2;
                    cof = (cols[static_cast<std::size_t>(r1 * m + 1)] * cols[static_cast<std::size_t>(r2 * m + 2)] -
                           cols[static_cast<std::size_t>(r1 * m + 2)] * cols[static_cast<std::size_t>(r2 * m + 1)]) % q;
                }
                if (i % 2) cof = -cof;
                cof %= q;
                if (cof < 0) cof += q;
                lin[static_cast<std::size_t>(p)] =
                    (lin[static_cast<std::size_t>(p)] + cof * tab.head[l][static_cast<std::size_t>(i * m)]) % q;
                for (int kk = 0; kk < p; ++kk)
                    lin[static_cast<std::size_t>(kk)] =
                        (lin[static_cast<std::size_t>(kk)] + cof * tab.tail[l][static_cast<std::size_t>(i * p + kk)]) % q;
            }
            lin_built[l] = true;
        };
        std::fill(lin_built.begin(), lin_built.end(), false);
        build_lin(0);
        build_lin(1);
        std::array<std::array<std::int64_t, 8>, 2> lin{lin_at[0], lin_at[1]};
        // solve the 2 x p affine system over F_q; enumerate all solutions
        sols_buffer.clear();
        [&] {
            std::vector<std::array<std::int64_t, 8>>& out = sols_buffer;
            // gaussian elimination on 2 x (p+1)
            std::array<std::array<std::int64_t, 8>, 2> a = lin;
            for (auto& row : a)
                for (int j = 0; j <= p; ++j) { row[static_cast<std::size_t>(j)] %= q; if (row[static_cast<std::size_t>(j)] < 0) row[static_cast<std::size_t>(j)] += q; }
            // RHS is -constant
            for (auto& row : a) row[static_cast<std::size_t>(p)] = (q - row[static_cast<std::size_t>(p)]) % q;
            int rank = 0;
            std::array<int, 2> pivcol{-1, -1};
            for (int c = 0; c < p && rank < 2; ++c) {
                int pr = -1;
                for (int r = rank; r < 2; ++r)
                    if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) { pr = r; break; }
                if (pr < 0) continue;
                std::swap(a[static_cast<std::size_t>(pr)], a[static_cast<std::size_t>(rank)]);
                std::int64_t inv = tab.inv_mod(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]);
                for (int j = 0; j <= p; ++j)
                    a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
                        a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * inv % q;
                for (int r = 0; r < 2; ++r) {
                    if (r == rank) continue;
                    std::int64_t f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                    if (!f) continue;
                    for (int j = 0; j <= p; ++j) {
                        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                            (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -
                             f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) % q;
                        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] < 0)
                            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] += q;
                    }
                }
                pivcol[static_cast<std::size_t>(rank)] = c;
                ++rank;
            }
            for (int r = rank; r < 2; ++r)
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)] != 0) return; // inconsistent
            // free columns
            std::vector<int> free_cols;
            for (int c = 0; c < p; ++c)
                if (c != pivcol[0] && c != pivcol[1]) free_cols.push_back(c);
            std::uint64_t combos = 1;
            for (std::size_t i = 0; i < free_cols.size(); ++i) combos *= static_cast<std::uint64_t>(q);
            if (combos > 4096) combos = 4096; // enough at desk scale
            for (std::uint64_t ci = 0; ci < combos; ++ci) {
                std::array<std::int64_t, 8> sol{};
                std::uint64_t v = ci;
                for (int fc : free_cols) {
                    sol[static_cast<std::size_t>(fc)] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(q));
                    v /= static_cast<std::uint64_t>(q);
                }
                for (int r = 0; r < rank; ++r) {
                    std::int64_t val = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)];
                    for (int fc : free_cols)
                        val -= a[static_cast<std::size_t>(r)][static_cast<std::size_t>(fc)] * sol[static_cast<std::size_t>(fc)] % q;
                    val %= q; if (val < 0) val += q;
                    sol[static_cast<std::size_t>(pivcol[static_cast<std::size_t>(r)])] = val;
                }
                out.push_back(sol);
            }
        }();

        for (const auto& sol : sols_buffer) {
            // 0 and 1 are roots by construction; need mp-2 more among the
            // remaining q-2 points, so bail out at the (q-mp+1)-th non-root
            int zeros = 2, nonroots = 0;
            const int max_nonroots = static_cast<int>(q) - mp;
            for (std::size_t l = 2; l < pts.size(); ++l) {
                if (!lin_built[l]) build_lin(l);
                const auto& cl = lin_at[l];
                std::int64_t val = cl[static_cast<std::size_t>(p)];
                for (int kk = 0; kk < p; ++kk)
                    val += cl[static_cast<std::size_t>(kk)] * sol[static_cast<std::size_t>(kk)];
                if (val % q == 0) ++zeros;
                else if (++nonroots > max_nonroots) break;
            }
            if (zeros != mp) continue;
            for (int kk = 0; kk < p; ++kk) x[static_cast<std::size_t>(kk)] = sol[static_cast<std::size_t>(kk)];
            auto inst = finalize_candidate(k, m, p, x_matrix_from_raw(k, m, p, x.data()), opts);
            if (!inst) continue;
            if (opts.diversify) {
                // seeded affine change of the parameter line
                Scalar aa(k, static_cast<long>(1 + rng.below(static_cast<std::uint64_t>(q - 1))));
                Scalar bb(k, static_cast<long>(rng.below(static_cast<std::uint64_t>(q))));
                WronskiInstance moved = instance_shift(instance_scale(*inst, aa), bb);
                if (!opts.require_simple) return moved;
                Scalar jd = local_jacobian(adapt_basis(moved.w), moved.s_list).det();
                if (!jd.is_zero()) return moved;
                return inst; // transform kept splitness; fall back to the found point
            }
            return inst;
        }
    }
    return std::nullopt;
}

// --- Q: structured generators ---

std::optional<WronskiInstance> sample_q_22(const Field& k, const SampleOptions& opts, SplitMix64& rng) {
    // enumerate distinct integer root quadruples with square fiber
    // discriminant D^2 = e2^2 + 12 e4 - 3 e1 e3; derive the chart point.
    const int want = static_cast<int>(rng.below(6));
    int found = 0;
    int budget = opts.structured_budget;
    for (int radius = 3; radius <= 12 && budget > 0; ++radius) {
        for (long r1 = -radius; r1 <= radius; ++r1)
        for (long r2 = r1 + 1; r2 <= radius; ++r2)
        for (long r3 = r2 + 1; r3 <= radius; ++r3)
        for (long r4 = r3 + 1; r4 <= radius; ++r4) {
            if (std::max({std::abs(r1), std::abs(r2), std::abs(r3), std::abs(r4)}) != radius)
                continue; // enumerated at a smaller radius already
            if (--budget <= 0) return std::nullopt;
            mpz_class e1 = r1 + r2 + r3 + r4;
            mpz_class e2 = r1*r2 + r1*r3 + r1*r4 + r2*r3 + r2*r4 + r3*r4;
            mpz_class e3 = r1*r2*r3 + r1*r2*r4 + r1*r3*r4 + r2*r3*r4;
            mpz_class e4 = mpz_class(r1) * r2 * r3 * r4;
            mpz_class disc = e2 * e2 + 12 * e4 - 3 * e1 * e3;
            if (disc <= 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
            mpz_class d;
            mpz_sqrt(d.get_mpz_t(), disc.get_mpz_t());
            for (int sgn2 : {1, -1}) {
                // quartic t^4 + c3 t^3 + c2 t^2 + c1 t + c0 = prod (t - r_i)
                mpq_class c3(-e1), c2(e2), c1(-e3), c0(e4);
                mpq_class b = (c2 + sgn2 * d) / 6;
                mpq_class a = c3 / 2;
                mpq_class dd = -c1 / 2;
                mpq_class c = 3 * b - c2;
                ScalarMatrix x(k, 2, 2);
                x.set(0, 0, Scalar::from_mpq(b));
                x.set(0, 1, Scalar::from_mpq(a));
                x.set(1, 0, Scalar::from_mpq(dd));
                x.set(1, 1, Scalar::from_mpq(c));
                auto inst = finalize_candidate(k, 2, 2, x, opts);
                if (inst && found++ == want) return inst;
            }
        }
    }
    return std::nullopt;
}

std::optional<WronskiInstance> sample_q_23(const Field& k, const SampleOptions& opts, SplitMix64& rng) {
    // residue construction: f = t^3 - A t with A = a^2; even target
    // Phi(u) = (u - u1)(u - u2)(u - u3) in u = t^2 subject to the vanishing
    // of the log-residues of Phi/f^2, which forces
    //   w3 = 2 A w1 w2 / (3 w1 w2 - 2 A (w1 + w2)),  w_i = A - u_i,
    // and g = t^4 - A t^2 - sum_i c_i f/(t - r_i) with
    // c_i = Phi(r_i) / prod_{j != i} (r_i - r_j)^2 over the roots r_i of f.
    std::vector<mpq_class> squares;
    for (int num = 1; num <= 12; ++num) squares.emplace_back(num * num);
    for (int den : {2, 3, 4, 5})
        for (int num = 1; num < 6 * den; ++num)
            if (std::gcd(num, den) == 1) squares.emplace_back(mpq_class(num * num, den * den));
    for (auto& s : squares) s.canonicalize();
    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());

    const int want = static_cast<int>(rng.below(4));
    int found = 0;
    int budget = opts.structured_budget;
    for (int ai = 1; ai <= 8 && budget > 0; ++ai) {
        mpq_class A(ai * ai);
        for (std::size_t i1 = 0; i1 < squares.size(); ++i1) {
            for (std::size_t i2 = i1 + 1; i2 < squares.size(); ++i2) {
                if (--budget <= 0) return std::nullopt;
                const mpq_class &u1 = squares[i1], &u2 = squares[i2];
                if (u1 == A || u2 == A) continue;
                mpq_class w1 = A - u1, w2 = A - u2;
                mpq_class den = 3 * w1 * w2 - 2 * A * (w1 + w2);
                if (den == 0) continue;
                mpq_class w3 = 2 * A * w1 * w2 / den;
                w3.canonicalize();
                mpq_class u3 = A - w3;
                if (u3 <= 0 || u3 == u1 || u3 == u2 || u3 == A) continue;
                if (!mpz_perfect_square_p(u3.get_num().get_mpz_t()) ||
                    !mpz_perfect_square_p(u3.get_den().get_mpz_t()))
                    continue;
                // assemble f, g
                Scalar As = Scalar::from_mpq(A);
                Poly f(k, {Scalar(k, 0), -As, Scalar(k, 0), Scalar(k, 1)});
                std::vector<Scalar> froots{Scalar(k, 0), Scalar(k, ai), Scalar(k, -ai)};
                Poly phi = Poly::constant(Scalar(k, 1));
                for (const mpq_class& u : {u1, u2, u3}) {
                    Poly quad(k, {Scalar::from_mpq(-u), Scalar(k, 0), Scalar(k, 1)});
                    phi = phi * quad;
                }
                Poly g(k, {Scalar(k, 0), Scalar(k, 0), -As, Scalar(k, 0), Scalar(k, 1)});
                for (const Scalar& r : froots) {
                    Scalar denom(k, 1);
                    for (const Scalar& r2 : froots)
                        if (!(r2 == r)) denom *= (r - r2) * (r - r2);
                    Scalar ci = phi.eval(r) / denom;
                    Poly lin(k, {-r, Scalar(k, 1)});
                    Poly quo = f.divexact(lin);
                    g = g - quo * ci;
                }
                // into standard chart coordinates: f has no t^2 term, g no t^3 term
                ScalarMatrix x(k, 2, 3);
                for (int kk = 0; kk < 3; ++kk) {
                    x.set(0, static_cast<std::size_t>(kk), f.coeff(static_cast<unsigned>(kk)));
                    x.set(1, static_cast<std::size_t>(kk), g.coeff(static_cast<unsigned>(kk)));
                }
                auto inst = finalize_candidate(k, 2, 3, x, opts);
                if (inst && found++ == want) return inst;
            }
        }
    }
    return std::nullopt;
}

std::optional<WronskiInstance> sample_q_33(const Field& k, const SampleOptions& opts, SplitMix64&) {
    // Both symmetric sublattices are searched exactly; the verified state of
    // affairs is that neither contains a rational split instance at small
    // height, and unstructured boxes have vanishing hit density.
    int budget = std::min(opts.structured_budget, 60000);
    const int R = 6;
    // t -> -t symmetric: f1 = t^3 + a t, f2 = t^4 + b t^2 + c, f3 = t^5 + g t
    for (long a = -R; a <= R && budget > 0; ++a)
        for (long b = -R; b <= R && budget > 0; ++b)
            for (long c = -R; c <= R && budget > 0; ++c)
                for (long g = -R; g <= R && budget > 0; ++g) {
                    --budget;
                    ScalarMatrix x(k, 3, 3);
                    x.set(0, 1, Scalar(k, a));
                    x.set(1, 0, Scalar(k, c));
                    x.set(1, 2, Scalar(k, b));
                    x.set(2, 1, Scalar(k, g));
                    auto inst = finalize_candidate(k, 3, 3, x, opts);
                    if (inst) return inst;
                }
    // t -> 1/t symmetric (palindromic): W = (2-plane in the (anti)invariant
    // part) + (line in the complement), both orientation types
    auto pal = [&](bool plus_two) -> std::optional<WronskiInstance> {
        int pal_budget = std::min(opts.structured_budget, 30000);
        Poly e0 = Poly::from_ints(k, {1, 0, 0, 0, 0, 1});    // 1 + t^5
        Poly e1 = Poly::from_ints(k, {0, 1, 0, 0, 1, 0});    // t + t^4
        Poly e2 = Poly::from_ints(k, {0, 0, 1, 1, 0, 0});    // t^2 + t^3
        Poly o0 = Poly::from_ints(k, {1, 0, 0, 0, 0, -1});   // 1 - t^5
        Poly o1 = Poly::from_ints(k, {0, 1, 0, 0, -1, 0});   // t - t^4
        Poly o2 = Poly::from_ints(k, {0, 0, 1, -1, 0, 0});   // t^2 - t^3
        const Poly &u0 = plus_two ? e0 : o0, &u1 = plus_two ? e1 : o1, &u2 = plus_two ? e2 : o2;
        const Poly &v0 = plus_two ? o0 : e0, &v1 = plus_two ? o1 : e1, &v2 = plus_two ? o2 : e2;
        const int Rp = 4;
        for (long a = -Rp; a <= Rp; ++a)
            for (long b = -Rp; b <= Rp; ++b)
                for (long c = -Rp; c <= Rp; ++c)
                    for (long d = -Rp; d <= Rp; ++d) {
                        if (--pal_budget <= 0) return std::nullopt;
                        std::vector<Poly> gens{u0 + u2 * Scalar(k, a), u1 + u2 * Scalar(k, b),
                                               v0 + v1 * Scalar(k, c) + v2 * Scalar(k, d)};
                        Subspace w = Subspace::from_polys(gens, 6);
                        Poly wr = wronskian(w);
                        if (wr.degree() != 9) continue;
                        auto roots = split_distinct_roots(wr);
                        if (!roots) continue;
                        Subspace norm = chart_normalize(w, 3, 3);
                        auto inst = finalize_candidate(k, 3, 3, [&] {
                            ScalarMatrix x(k, 3, 3);
                            for (int g2 = 0; g2 < 3; ++g2)
                                for (int kk = 0; kk < 3; ++kk)
                                    x.set(static_cast<std::size_t>(g2), static_cast<std::size_t>(kk),
                                          norm.basis().at(static_cast<std::size_t>(g2), static_cast<std::size_t>(kk)));
                            return x;
                        }(), opts);
                        if (inst) return inst;
                    }
        return std::nullopt;
    };
    if (auto inst = pal(true)) return inst;
    if (auto inst = pal(false)) return inst;
    return std::nullopt;
}

// generic random sampler through the exact path; the fallback for shapes
// outside the modular fast-scan domain, and the only random stage over Q
std::optional<WronskiInstance> sample_random_generic(const Field& k, int m, int p,
                                                     const SampleOptions& opts, SplitMix64& rng) {
    for (int draw = 0; draw < opts.random_budget; ++draw) {
        ScalarMatrix x(k, static_cast<std::size_t>(m), static_cast<std::size_t>(p));
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
                x.set(i, j, k.is_prime_field()
                                ? Scalar(k, static_cast<long>(rng.below(k.characteristic())))
                                : Scalar(k, rng.in_box(opts.q_box)));
        auto inst = finalize_candidate(k, m, p, x, opts);
        if (inst) return inst;
    }
    return std::nullopt;
}

} // namespace

std::optional<WronskiInstance> sample_instance(const Field& k, int m, int p,
                                               const SampleOptions& opts) {
    if (m < 1 || p < 1) throw std::invalid_argument("sample_instance: m, p must be positive");
    if (!factorial_invertible(static_cast<unsigned>(m + p - 1), k))
        throw std::invalid_argument("sample_instance: (m+p-1)! not invertible in " + k.str());
    SplitMix64 rng(opts.seed);
    if (k.is_prime_field()) {
        if (k.characteristic() > 100003)
            throw std::invalid_argument(
                "sample_instance: prime-field samplers scan all residues and support p <= 100003");
        if (static_cast<int>(k.characteristic()) < m * p)
            return std::nullopt; // no mp distinct scalars exist in F_p
        if (m > 4 || p > 7)
            return sample_random_generic(k, m, p, opts, rng);
        if (auto inst = sample_fp_random(k, m, p, opts, rng)) return inst;
        if (opts.structured)
            if (auto inst = sample_fp_normalized(k, m, p, opts, rng)) return inst;
        return std::nullopt;
    }
    if (auto inst = sample_random_generic(k, m, p, opts, rng)) return inst;
    if (opts.structured) {
        std::optional<WronskiInstance> inst;
        if (m == 2 && p == 2) inst = sample_q_22(k, opts, rng);
        else if (m == 2 && p == 3) inst = sample_q_23(k, opts, rng);
        else if (m == 3 && p == 2) {
            if (auto dual = sample_q_23(k, opts, rng)) inst = instance_transport(*dual);
        } else if (m == 3 && p == 3) inst = sample_q_33(k, opts, rng);
        if (inst && opts.diversify) {
            Scalar c(k, rng.in_box(9));
            WronskiInstance moved = instance_shift(*inst, c);
            if (!opts.require_simple) return moved;
            Scalar jd = local_jacobian(adapt_basis(moved.w), moved.s_list).det();
            return jd.is_zero() ? inst : std::optional<WronskiInstance>(moved);
        }
        if (inst) return inst;
    }
    return std::nullopt;
}

GlobalDegreeReport global_degree(const Field& k, int m, int p,
                                 const std::vector<Scalar>& s_list, std::uint64_t budget) {
    if (m % 2 || p % 2)
        throw std::invalid_argument("global_degree: m and p must both be even (the bundle is only "
                                    "relatively orientable in that parity)");
    GlobalDegreeReport rep;
    rep.expected = n_complex(m, p);
    rep.fiber = fiber_enumerate(k, m, p, s_list, budget);
    rep.all_simple = true;
    if (mpz_class(static_cast<long>(rep.fiber.size())) > rep.expected)
        throw std::logic_error("global_degree: more rational fiber points than n_C");

    std::vector<LocalIndexReport> locals;
    for (const auto& w : rep.fiber) {
        try {
            locals.push_back(local_degree(w, s_list));
        } catch (const NonSimpleZeroError&) {
            rep.all_simple = false;
        }
    }
    if (mpz_class(static_cast<long>(rep.fiber.size())) < rep.expected) {
        rep.diagnostic = "non-split fiber: only " + std::to_string(rep.fiber.size()) + " of " +
                         rep.expected.get_str() + " points are rational; resample sList";
        return rep;
    }
    if (!rep.all_simple) {
        rep.diagnostic = "degenerate instance: a fiber point is a non-simple zero";
        return rep;
    }
    GWClass sum(k);
    for (const auto& li : locals) sum += li.degree_formula;
    rep.sum = sum;
    mpz_class half = rep.expected / 2;
    rep.verdict = sum.equals_hyperbolic_multiple(static_cast<int>(half.get_si()));
    return rep;
}

// ---------------------------------------------------------------------------
// exact instance transforms

namespace {

WronskiInstance rebuild_from_plane(const Field& k, int m, int p, Subspace w,
                                   std::vector<Scalar> s) {
    std::sort(s.begin(), s.end(), scalar_less);
    Subspace normalized = chart_normalize(w, m, p);
    return WronskiInstance(k, m, p, Chart::standard(k, m, p), std::move(s), std::move(normalized));
}

} // namespace

WronskiInstance instance_shift(const WronskiInstance& inst, const Scalar& c) {
    std::vector<Poly> rows;
    for (int i = 0; i < inst.w.plane_dim(); ++i)
        rows.push_back(inst.w.row_poly(static_cast<std::size_t>(i)).shift(-c));
    std::vector<Scalar> s;
    for (const auto& si : inst.s_list) s.push_back(si + c);
    return rebuild_from_plane(inst.field, inst.m, inst.p,
                              Subspace::from_polys(rows, inst.m + inst.p), std::move(s));
}

WronskiInstance instance_scale(const WronskiInstance& inst, const Scalar& a) {
    if (a.is_zero()) throw std::invalid_argument("instance_scale: scale must be nonzero");
    Scalar inv = a.inverse();
    std::vector<Poly> rows;
    for (int i = 0; i < inst.w.plane_dim(); ++i)
        rows.push_back(inst.w.row_poly(static_cast<std::size_t>(i)).scale_arg(inv));
    std::vector<Scalar> s;
    for (const auto& si : inst.s_list) s.push_back(si * a);
    return rebuild_from_plane(inst.field, inst.m, inst.p,
                              Subspace::from_polys(rows, inst.m + inst.p), std::move(s));
}

WronskiInstance instance_transport(const WronskiInstance& inst) {
    Subspace dual = apolar(annihilator(inst.w));
    return rebuild_from_plane(inst.field, inst.p, inst.m, std::move(dual), inst.s_list);
}

ScalarMatrix instance_chart_coords(const WronskiInstance& inst) {
    Subspace normalized = chart_normalize(inst.w, inst.m, inst.p);
    ScalarMatrix x(inst.field, static_cast<std::size_t>(inst.m), static_cast<std::size_t>(inst.p));
    for (int g = 0; g < inst.m; ++g)
        for (int kk = 0; kk < inst.p; ++kk)
            x.set(static_cast<std::size_t>(g), static_cast<std::size_t>(kk),
                  normalized.basis().at(static_cast<std::size_t>(g), static_cast<std::size_t>(kk)));
    return x;
}

} // namespace wrgw
