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

#ifndef WRGW_GW_HPP
#define WRGW_GW_HPP

#include <optional>

#include "wrgw/field.hpp"

namespace wrgw {

/// Sum of rank-1 symmetric bilinear forms <a_1> + ... + <a_r> over a fixed
/// field. Generators are kept within their square class (reduced by cheap
/// exact square stripping); all equality decisions go through exact
/// square-class tests, never representation comparison.
class GWClass {
public:
    explicit GWClass(const Field& k) : field_(k) {}

    static GWClass rank_one(const Scalar& a);
    static GWClass hyperbolic(const Field& k, int n = 1);

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] const std::vector<Scalar>& generators() const { return gens_; }

    GWClass operator+(const GWClass& o) const;
    GWClass& operator+=(const GWClass& o);

    [[nodiscard]] int rank() const { return static_cast<int>(gens_.size()); }
    /// Product of the generators; class of the discriminant. Throws on the
    /// empty class.
    [[nodiscard]] Scalar discriminant_value() const;
    /// Canonical discriminant tag (factorization-backed over Q).
    [[nodiscard]] SquareClass discriminant() const;
    /// #positive - #negative generators; rationals only.
    [[nodiscard]] std::optional<int> signature() const;

    enum class Verdict { True, False, InvariantsConsistent };

    /// Is this class equal to n * H? Decided exactly over F_p (rank and
    /// discriminant classify diagonal forms there). Over Q: True only when
    /// the generators pair off completely as <a>, <-a*square>; otherwise
    /// InvariantsConsistent when rank, signature and discriminant all match
    /// n * H, else False.
    [[nodiscard]] Verdict equals_hyperbolic_multiple(int n) const;

    /// "<a1,a2,...>"; the empty class renders "<>".
    [[nodiscard]] std::string str() const;

    /// "n*H" when the class provably equals n*H, otherwise the generator
    /// list followed by the invariant tuple (rank, disc, signature).
    [[nodiscard]] std::string str_canonical() const;

private:
    Field field_;
    std::vector<Scalar> gens_;
};

[[nodiscard]] std::string verdict_str(GWClass::Verdict v);

/// Representative of the square class of a, reduced by exact square
/// stripping (denominator squares, small prime squares, perfect-square
/// cofactors). Same square class as a, chosen deterministically.
[[nodiscard]] Scalar reduce_square_class(const Scalar& a);

} // namespace wrgw

#endif
