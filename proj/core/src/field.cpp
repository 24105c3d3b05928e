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

#include "wrgw/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <vector>

namespace wrgw {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p == 2 || !is_prime_u64(p))
        throw std::invalid_argument("Field::prime: characteristic must be an odd prime, got " + std::to_string(p));
    Field k;
    k.p_ = p;
    return k;
}

std::string Field::str() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Field Field::parse(std::string_view text) {
    if (text == "Q" || text == "q") return rationals();
    std::string_view t = text;
    if (t.rfind("Fp:", 0) == 0) t.remove_prefix(3);
    else if (!t.empty() && (t[0] == 'F' || t[0] == 'f')) t.remove_prefix(1);
    else throw std::invalid_argument("Field::parse: expected Q or Fp:<p>, got '" + std::string(text) + "'");
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), p);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw std::invalid_argument("Field::parse: bad characteristic in '" + std::string(text) + "'");
    return prime(p);
}

bool factorial_invertible(unsigned n, const Field& k) {
    if (k.is_rational()) return true;
    return k.characteristic() > n;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Field& k, long v) : field_(k), q_(0), r_(0) {
    if (k.is_rational()) {
        q_ = v;
    } else {
        auto p = static_cast<std::int64_t>(k.characteristic());
        r_ = v % p;
        if (r_ < 0) r_ += p;
    }
}

Scalar Scalar::from_mpq(mpq_class v) {
    Scalar s;
    v.canonicalize();
    s.q_ = std::move(v);
    return s;
}

Scalar Scalar::from_mpz(const Field& k, const mpz_class& v) {
    Scalar s(k);
    if (k.is_rational()) {
        s.q_ = v;
    } else {
        mpz_class r = v % k.characteristic();
        if (r < 0) r += k.characteristic();
        s.r_ = r.get_si();
    }
    return s;
}

Scalar Scalar::fraction(const Field& k, long num, long den) {
    if (den == 0) throw std::domain_error("Scalar::fraction: zero denominator");
    if (k.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        Scalar s(k);
        s.q_ = std::move(q);
        return s;
    }
    return Scalar(k, num) / Scalar(k, den);
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

const mpq_class& Scalar::rat() const {
    if (!field_.is_rational()) throw std::domain_error("Scalar::rat on prime-field element");
    return q_;
}

std::int64_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw std::domain_error("Scalar::residue on rational");
    return r_;
}

int Scalar::sign() const {
    if (!field_.is_rational()) throw std::domain_error("Scalar::sign on prime-field element");
    return sgn(q_);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("Scalar: field mismatch (" + field_.str() + " vs " + o.field_.str() + ")");
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (field_.is_rational()) s.q_ = -q_;
    else if (r_ != 0) s.r_ = static_cast<std::int64_t>(field_.characteristic()) - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.q_ = q_ + o.q_;
    } else {
        auto p = static_cast<std::int64_t>(field_.characteristic());
        s.r_ = r_ + o.r_;
        if (s.r_ >= p) s.r_ -= p;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.q_ = q_ * o.q_;
    } else {
        s.r_ = static_cast<std::int64_t>(mulmod_u64(
            static_cast<std::uint64_t>(r_), static_cast<std::uint64_t>(o.r_),
            field_.characteristic()));
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse of zero");
    Scalar s(field_);
    if (field_.is_rational()) {
        s.q_ = 1 / q_;
    } else {
        s.r_ = static_cast<std::int64_t>(powmod_u64(
            static_cast<std::uint64_t>(r_), field_.characteristic() - 2,
            field_.characteristic()));
    }
    return s;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc(field_, 1);
    Scalar base(*this);
    auto k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_) + " mod " + std::to_string(field_.characteristic());
}

Scalar Scalar::parse(const Field& k, std::string_view text) {
    auto strip = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
        return v;
    };
    std::string_view t = strip(text);
    if (auto pos = t.find("mod"); pos != std::string_view::npos) {
        std::string_view num = strip(t.substr(0, pos));
        std::string_view mod = strip(t.substr(pos + 3));
        Field kk = Field::prime(static_cast<std::uint32_t>(std::stoul(std::string(mod))));
        if (k.is_prime_field() && kk != k)
            throw std::invalid_argument("Scalar::parse: modulus disagrees with field");
        mpz_class n(std::string(num), 10);
        return from_mpz(kk, n);
    }
    if (k.is_rational()) {
        mpq_class q(std::string(t), 10);
        q.canonicalize();
        Scalar s;
        s.q_ = std::move(q);
        return s;
    }
    // plain integer embedded in F_p, fraction allowed
    if (auto pos = t.find('/'); pos != std::string_view::npos) {
        mpz_class n(std::string(strip(t.substr(0, pos))), 10);
        mpz_class d(std::string(strip(t.substr(pos + 1))), 10);
        return from_mpz(k, n) / from_mpz(k, d);
    }
    mpz_class n(std::string(t), 10);
    return from_mpz(k, n);
}

// ---------------------------------------------------------------------------
// square classes

namespace {

mpz_class pollard_brent(const mpz_class& n, unsigned long seed) {
    // Brent's cycle variant; n odd composite, not a perfect power of a found factor.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    while (true) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 2) + 1;
        mpz_class x = y, ys = y, d = 1, q = 1;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                mpz_class diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
    }
}

void factor_hard(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    // n > 1 with no factors below the trial bound
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out[n] += 1;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        std::map<mpz_class, unsigned> sub;
        factor_hard(root, sub);
        for (const auto& [q, e] : sub) out[q] += 2 * e;
        return;
    }
    mpz_class d = pollard_brent(n, 0x9e3779b97f4a7c15ull);
    factor_hard(d, out);
    factor_hard(n / d, out);
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n <= 1) return;
    while (mpz_divisible_ui_p(n.get_mpz_t(), 2)) {
        out[mpz_class(2)] += 1;
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), 2);
    }
    for (unsigned long q = 3; q < 100000ul && n > 1; q += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            out[mpz_class(q)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
        }
    }
    if (n > 1) factor_hard(n, out);
}

} // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
    if (n == 0) throw std::domain_error("factor_integer of zero");
    std::map<mpz_class, unsigned> fac;
    factor_into(abs(n), fac);
    return {fac.begin(), fac.end()};
}

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) throw std::domain_error("squarefree_part of zero");
    mpz_class out = 1;
    for (const auto& [q, e] : factor_integer(n))
        if (e % 2) out *= q;
    return out;
}

std::int64_t least_nonresidue(std::uint32_t p) {
    for (std::int64_t a = 2;; ++a) {
        if (powmod_u64(static_cast<std::uint64_t>(a), (p - 1) / 2, p) == p - 1) return a;
    }
}

SquareClass square_class(const Scalar& a) {
    if (a.is_zero()) throw std::domain_error("square class of zero undefined");
    SquareClass c;
    c.field = a.field();
    if (a.field().is_rational()) {
        const mpq_class& q = a.rat();
        c.sign = sgn(q) > 0 ? 1 : -1;
        c.squarefree = squarefree_part(q.get_num() * q.get_den());
    } else {
        std::uint32_t p = a.field().characteristic();
        c.is_residue = powmod_u64(static_cast<std::uint64_t>(a.residue()), (p - 1) / 2, p) == 1;
        c.rep = c.is_residue ? 1 : least_nonresidue(p);
    }
    return c;
}

bool SquareClass::operator==(const SquareClass& o) const {
    if (field != o.field) return false;
    if (field.is_rational()) return sign == o.sign && squarefree == o.squarefree;
    return is_residue == o.is_residue;
}

std::string SquareClass::str() const {
    if (field.is_rational())
        return (sign < 0 ? "-" : "+") + squarefree.get_str();
    return is_residue ? "residue" : "nonresidue(" + std::to_string(rep) + ")";
}

bool is_square(const Scalar& a) {
    if (a.is_zero()) throw std::domain_error("is_square of zero undefined");
    if (a.field().is_rational()) {
        const mpq_class& q = a.rat();
        if (sgn(q) < 0) return false;
        return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
               mpz_perfect_square_p(q.get_den().get_mpz_t());
    }
    std::uint32_t p = a.field().characteristic();
    return powmod_u64(static_cast<std::uint64_t>(a.residue()), (p - 1) / 2, p) == 1;
}

bool same_square_class(const Scalar& a, const Scalar& b) {
    return is_square(a * b);
}

} // namespace wrgw
