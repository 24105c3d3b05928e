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

#ifndef WRGW_FIELD_HPP
#define WRGW_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wrgw {

/// Ground field: the rationals (characteristic 0) or a prime field F_p
/// with p an odd prime.
class Field {
public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }

    /// F_p; throws unless p is an odd prime.
    static Field prime(std::uint32_t p);

    [[nodiscard]] std::uint32_t characteristic() const { return p_; }
    [[nodiscard]] bool is_rational() const { return p_ == 0; }
    [[nodiscard]] bool is_prime_field() const { return p_ != 0; }

    bool operator==(const Field&) const = default;

    /// "Q" or "F<p>".
    [[nodiscard]] std::string str() const;

    /// Parses "Q" / "Fp:<p>" / "F<p>".
    static Field parse(std::string_view text);

private:
    std::uint32_t p_;
};

[[nodiscard]] bool is_prime_u64(std::uint64_t n);

/// True iff n! is a unit in k (always over Q; over F_p iff p > n).
[[nodiscard]] bool factorial_invertible(unsigned n, const Field& k);

/// Exact field element in canonical form: a reduced fraction with positive
/// denominator over Q, a residue in [0, p) over F_p. Equality is
/// representation equality; all arithmetic is exact.
class Scalar {
public:
    Scalar() : field_(), q_(0), r_(0) {}
    explicit Scalar(const Field& k) : field_(k), q_(0), r_(0) {}
    Scalar(const Field& k, long v);

    static Scalar from_mpq(mpq_class v);
    static Scalar from_mpz(const Field& k, const mpz_class& v);
    /// num/den in k; den must be a unit.
    static Scalar fraction(const Field& k, long num, long den);

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_one() const;

    /// Reduced rational value (rational field only).
    [[nodiscard]] const mpq_class& rat() const;
    /// Residue in [0, p) (prime field only).
    [[nodiscard]] std::int64_t residue() const;
    /// Sign over Q: -1, 0, +1.
    [[nodiscard]] int sign() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "a/b" (or "a" for integers) over Q; "r mod p" over F_p.
    [[nodiscard]] std::string str() const;
    static Scalar parse(const Field& k, std::string_view text);

private:
    void check_same_field(const Scalar& o) const;

    Field field_;
    mpq_class q_;       // value when rational
    std::int64_t r_;    // residue when prime field
};

/// Canonical square-class tag. Two nonzero scalars get equal tags iff their
/// ratio is a square in the field. Over Q the tag is (sign, squarefree part
/// of numerator*denominator); over F_p it is residue / non-residue with the
/// least positive non-residue as the printed representative.
struct SquareClass {
    Field field;
    int sign = 1;               // Q only
    mpz_class squarefree = 1;   // Q only, positive
    bool is_residue = true;     // F_p only
    std::int64_t rep = 1;       // F_p canonical representative

    bool operator==(const SquareClass& o) const;
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
    [[nodiscard]] std::string str() const;
};

/// Canonical tag of a nonzero scalar; throws on zero. Over Q this factors
/// numerator*denominator (trial division + Pollard rho).
[[nodiscard]] SquareClass square_class(const Scalar& a);

/// Exact test "a and b lie in the same square class" that needs no
/// factorization: sign agreement + perfect-square test of a*b over Q,
/// Euler's criterion over F_p. Throws if either argument is zero.
[[nodiscard]] bool same_square_class(const Scalar& a, const Scalar& b);

/// Exact test "a is a nonzero square"; throws on zero.
[[nodiscard]] bool is_square(const Scalar& a);

/// Least positive non-residue mod p.
[[nodiscard]] std::int64_t least_nonresidue(std::uint32_t p);

/// Squarefree part of a nonzero integer (sign preserved on request by caller;
/// input taken by absolute value). Exposed for tests.
[[nodiscard]] mpz_class squarefree_part(const mpz_class& n);

/// Full factorization of |n| as (prime, exponent) pairs, ascending.
/// Trial division below 1e5, then Miller-Rabin + Brent rho. Throws on zero.
[[nodiscard]] std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

} // namespace wrgw

#endif
