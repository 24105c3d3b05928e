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

#ifndef WRGW_POLY_HPP
#define WRGW_POLY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wrgw/field.hpp"

namespace wrgw {

/// Dense univariate polynomial over a Field. Coefficient i is the
/// coefficient of t^i; trailing zeros are trimmed, so the leading
/// coefficient is nonzero unless the polynomial is zero.
class Poly {
public:
    explicit Poly(const Field& k) : field_(k) {}
    Poly(const Field& k, std::vector<Scalar> coeffs);

    static Poly constant(const Scalar& c);
    static Poly monomial(const Field& k, unsigned deg);
    static Poly from_ints(const Field& k, const std::vector<long>& coeffs);

    [[nodiscard]] const Field& field() const { return field_; }
    /// Degree; -1 encodes the zero polynomial ("-inf").
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] Scalar coeff(unsigned i) const;
    [[nodiscard]] Scalar leading() const;
    [[nodiscard]] bool is_monic() const;
    [[nodiscard]] const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Formal order-th derivative.
    [[nodiscard]] Poly derivative(unsigned order = 1) const;
    [[nodiscard]] Scalar eval(const Scalar& s) const;
    /// Substitute t -> t + c (exact shift).
    [[nodiscard]] Poly shift(const Scalar& c) const;
    /// Substitute t -> a*t.
    [[nodiscard]] Poly scale_arg(const Scalar& a) const;
    [[nodiscard]] Poly monic() const;

    [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& d) const;
    /// Division known to be exact; throws if a remainder appears.
    [[nodiscard]] Poly divexact(const Poly& d) const;

    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);

    /// "c0 + c1*t + c2*t^2" with zero terms omitted.
    [[nodiscard]] std::string str() const;
    static Poly parse(const Field& k, std::string_view text);

private:
    void trim();

    Field field_;
    std::vector<Scalar> coeffs_;
};

/// If f = c * prod (t - s_i) with deg(f) distinct roots in the field,
/// returns them sorted canonically (by value over Q, by least nonnegative
/// representative over F_p); otherwise nullopt. Exact. Throws on f = 0.
std::optional<std::vector<Scalar>> split_distinct_roots(const Poly& f);

/// Monic product prod (t - s_i).
Poly poly_from_roots(const Field& k, const std::vector<Scalar>& roots);

/// Canonical root ordering used by split_distinct_roots.
bool scalar_less(const Scalar& a, const Scalar& b);

} // namespace wrgw

#endif
