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

#ifndef WRGW_DEGREES_HPP
#define WRGW_DEGREES_HPP

#include <optional>

#include "wrgw/gw.hpp"
#include "wrgw/tableaux.hpp"
#include "wrgw/wronski.hpp"

namespace wrgw {

struct NonSimpleZeroError : std::runtime_error {
    explicit NonSimpleZeroError(const std::string& what) : std::runtime_error(what) {}
};
struct NotAZeroError : std::runtime_error {
    explicit NotAZeroError(const std::string& what) : std::runtime_error(what) {}
};
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Chart centered at W: base basis with e_{p+1..m+p} the reduced-echelon
/// rows of W (pivots located from the high-degree side) and e_{1..p} the
/// standard monomials at the complementary columns, both in increasing
/// column order. chart_point(adapt_basis(W), 0) spans W again.
[[nodiscard]] Chart adapt_basis(const Subspace& w);

/// The mp x mp matrix of partials (dF_l/dx_{gamma,k})|_0, rows indexed
/// (gamma,k) gamma-major, columns l, each entry computed by the
/// eps-perturbation of the Wronski determinant.
[[nodiscard]] ScalarMatrix local_jacobian(const Chart& chart, const std::vector<Scalar>& s_list);

/// det of local_jacobian; requires the chart center to be a zero of the
/// section (throws NotAZeroError otherwise).
[[nodiscard]] Scalar jacobian_det_at_zero(const Chart& chart, const std::vector<Scalar>& s_list);

/// The mp x mp matrix B: entry at row (gamma,k) (gamma-major), column l is
/// z_{alpha(gamma,k)}(F_m(s_l)) written in the chart cobasis, computed as
/// Wr(e_k, e_{p+1}, ..., e_{p+gamma} omitted, ..., e_{m+p})(s_l).
[[nodiscard]] ScalarMatrix matrix_B(const Chart& chart, const std::vector<Scalar>& s_list);

/// V(s_1..s_mp) * (prod_{i<m} i!)^{mp} * (-1)^{m(m-1)p/2}.
[[nodiscard]] Scalar constant_C(int m, int p, const std::vector<Scalar>& s_list);

struct LocalIndexReport {
    Subspace w;
    Scalar jacobian_det;
    Scalar det_B;
    Scalar constant;            // C
    GWClass degree_direct;      // <V(s) (prod i!)^{mp} jacobian_det>
    GWClass degree_formula;     // <C det B>
    bool agrees = false;        // square classes of the two generators match
    bool scalar_identity = false; // jacobian_det == (-1)^{m(m-1)p/2} det B, exactly
};

/// Both routes to the local degree at a simple fiber point W over
/// prod (t - s_i). Throws NotAZeroError if W is not in the fiber and
/// NonSimpleZeroError when the Jacobian vanishes (degree formulas at
/// non-simple zeros are out of scope).
[[nodiscard]] LocalIndexReport local_degree(const Subspace& w, const std::vector<Scalar>& s_list);

struct SampleOptions {
    std::uint64_t seed = 0x77726777u;
    int random_budget = 1000;        // plain random draws
    long q_box = 5;                  // integer box half-width over Q
    bool structured = true;          // enable structured generators after random draws
    bool require_simple = false;     // resample until the fiber point is simple
    int structured_budget = 250000;  // structured lattice candidates
    std::uint64_t scan_budget = 50000000; // normalized-scan candidates over F_p
    bool diversify = true;           // random affine change after a structured hit
};

/// Sample a split Wronski instance: pick W (random chart points first, then
/// structured generators), accept iff Wr(W) has mp distinct roots in the
/// field. Returns nullopt when every stage exhausts its budget (over F_p
/// this includes the provable "no split instance for this field size" case
/// p < mp).
[[nodiscard]] std::optional<WronskiInstance> sample_instance(const Field& k, int m, int p,
                                                             const SampleOptions& opts = {});

/// All rational W in the big cell with section_values(W, s) = 0, by
/// exhaustive scan of the standard chart over F_p. Throws
/// BudgetExceededError when p^{mp} exceeds the budget.
[[nodiscard]] std::vector<Subspace> fiber_enumerate(const Field& k, int m, int p,
                                                    const std::vector<Scalar>& s_list,
                                                    std::uint64_t budget = 50000000);

struct GlobalDegreeReport {
    std::vector<Subspace> fiber;
    bool all_simple = false;
    mpz_class expected;              // n_C
    std::optional<GWClass> sum;
    std::optional<GWClass::Verdict> verdict;
    std::string diagnostic;
};

/// Theorem-A check at desk scale: enumerate the fiber over F_p, require all
/// n_C points rational and simple, sum the local degrees and compare with
/// (n_C/2) H. Verdict withheld (with diagnostic) on non-split fibers or
/// degenerate points.
[[nodiscard]] GlobalDegreeReport global_degree(const Field& k, int m, int p,
                                               const std::vector<Scalar>& s_list,
                                               std::uint64_t budget = 50000000);

/// Exact instance transforms; each returns a freshly validated instance.
[[nodiscard]] WronskiInstance instance_shift(const WronskiInstance& inst, const Scalar& c);
[[nodiscard]] WronskiInstance instance_scale(const WronskiInstance& inst, const Scalar& a);
/// Grassmann-duality transport (annihilator followed by apolarity): an
/// instance on Gr(p, m+p) with the same root list.
[[nodiscard]] WronskiInstance instance_transport(const WronskiInstance& inst);

/// Standard-chart coordinates of an instance's W (the unique x with
/// chart_point(standard, x) = W).
[[nodiscard]] ScalarMatrix instance_chart_coords(const WronskiInstance& inst);

} // namespace wrgw

#endif
