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

#include "wrgw/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace wrgw {

Poly::Poly(const Field& k, std::vector<Scalar> coeffs)
    : field_(k), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.field() != field_)
            throw std::invalid_argument("Poly: coefficient field mismatch");
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
    Poly f(c.field());
    if (!c.is_zero()) f.coeffs_.push_back(c);
    return f;
}

Poly Poly::monomial(const Field& k, unsigned deg) {
    Poly f(k);
    f.coeffs_.assign(deg + 1, Scalar(k));
    f.coeffs_.back() = Scalar(k, 1);
    return f;
}

Poly Poly::from_ints(const Field& k, const std::vector<long>& coeffs) {
    std::vector<Scalar> cs;
    cs.reserve(coeffs.size());
    for (long v : coeffs) cs.emplace_back(k, v);
    return Poly(k, std::move(cs));
}

Scalar Poly::coeff(unsigned i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return Scalar(field_);
}

Scalar Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly::leading of zero polynomial");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && leading().is_one(); }

Poly Poly::operator-() const {
    Poly f(*this);
    for (auto& c : f.coeffs_) c = -c;
    return f;
}

Poly Poly::operator+(const Poly& o) const {
    if (field_ != o.field_) throw std::invalid_argument("Poly: field mismatch");
    Poly f(field_);
    f.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Scalar(field_));
    for (size_t i = 0; i < f.coeffs_.size(); ++i)
        f.coeffs_[i] = coeff(static_cast<unsigned>(i)) + o.coeff(static_cast<unsigned>(i));
    f.trim();
    return f;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (field_ != o.field_) throw std::invalid_argument("Poly: field mismatch");
    if (is_zero() || o.is_zero()) return Poly(field_);
    Poly f(field_);
    f.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Scalar(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            f.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    f.trim();
    return f;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly f(*this);
    for (auto& x : f.coeffs_) x *= c;
    f.trim();
    return f;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

Poly Poly::derivative(unsigned order) const {
    Poly f(*this);
    for (unsigned k = 0; k < order; ++k) {
        if (f.is_zero()) return f;
        std::vector<Scalar> d;
        d.reserve(f.coeffs_.size());
        for (size_t i = 1; i < f.coeffs_.size(); ++i)
            d.push_back(f.coeffs_[i] * Scalar(field_, static_cast<long>(i)));
        f.coeffs_ = std::move(d);
        f.trim();
    }
    return f;
}

Scalar Poly::eval(const Scalar& s) const {
    Scalar acc(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * s + *it;
    return acc;
}

Poly Poly::shift(const Scalar& c) const {
    // Horner on t+c
    Poly acc(field_);
    Poly lin(field_, {c, Scalar(field_, 1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + Poly::constant(*it);
    return acc;
}

Poly Poly::scale_arg(const Scalar& a) const {
    Poly f(*this);
    Scalar pw(field_, 1);
    for (size_t i = 0; i < f.coeffs_.size(); ++i) {
        f.coeffs_[i] *= pw;
        pw *= a;
    }
    f.trim();
    return f;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("Poly::monic of zero polynomial");
    return *this * leading().inverse();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divmod by zero");
    Poly r(*this);
    Poly q(field_);
    q.coeffs_.assign(std::max<int>(0, degree() - d.degree() + 1), Scalar(field_));
    Scalar lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Scalar c = r.leading() * lead_inv;
        q.coeffs_[static_cast<size_t>(k)] = c;
        for (size_t i = 0; i < d.coeffs_.size(); ++i)
            r.coeffs_[static_cast<size_t>(k) + i] -= c * d.coeffs_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::divexact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("Poly::divexact: division not exact");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = b.monic();
    }
    if (!a.is_zero()) a = a.monic();
    return a;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        // residues render bare; the ambient field is known from context
        std::string c = field_.is_prime_field() ? std::to_string(coeffs_[i].residue())
                                                : coeffs_[i].str();
        bool needs_parens = c.find(' ') != std::string::npos ||
                            (i > 0 && (c.find('/') != std::string::npos || c[0] == '-'));
        if (i == 0) {
            out << c;
        } else {
            if (needs_parens) out << "(" << c << ")";
            else out << c;
            out << "*t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Poly Poly::parse(const Field& k, std::string_view text) {
    // terms separated by + / -, each "<coeff>", "(<coeff>)", "<coeff>*t^k",
    // "t^k", "t"; coefficients may be fractions
    std::map<unsigned, Scalar> terms;
    std::string s(text);
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size())
        throw std::invalid_argument("Poly::parse: empty input");
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        std::string num;
        if (i < s.size() && s[i] == '(') {
            size_t close = s.find(')', i);
            if (close == std::string::npos)
                throw std::invalid_argument("Poly::parse: unbalanced parenthesis in '" + std::string(text) + "'");
            num = s.substr(i + 1, close - i - 1);
            i = close + 1;
        } else {
            size_t start = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
            num = s.substr(start, i - start);
        }
        skip_ws();
        bool has_t = false;
        unsigned deg = 0;
        if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        if (i < s.size() && (s[i] == 't' || s[i] == 'x')) {
            has_t = true;
            ++i;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t ds = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (ds == i)
                    throw std::invalid_argument("Poly::parse: missing exponent in '" + std::string(text) + "'");
                deg = static_cast<unsigned>(std::stoul(s.substr(ds, i - ds)));
            } else {
                deg = 1;
            }
        }
        if (num.empty() && !has_t)
            throw std::invalid_argument("Poly::parse: bad term in '" + std::string(text) + "'");
        Scalar c = num.empty() ? Scalar(k, 1) : Scalar::parse(k, num);
        if (sign < 0) c = -c;
        auto [it, inserted] = terms.try_emplace(deg, c);
        if (!inserted) it->second += c;
        skip_ws();
    }
    unsigned maxdeg = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Scalar> cs(maxdeg + 1, Scalar(k));
    for (const auto& [d, c] : terms) cs[d] = c;
    return Poly(k, std::move(cs));
}

// ---------------------------------------------------------------------------

bool scalar_less(const Scalar& a, const Scalar& b) {
    if (a.field().is_rational()) return a.rat() < b.rat();
    return a.residue() < b.residue();
}

Poly poly_from_roots(const Field& k, const std::vector<Scalar>& roots) {
    Poly f = Poly::constant(Scalar(k, 1));
    for (const auto& r : roots)
        f = f * Poly(k, {-r, Scalar(k, 1)});
    return f;
}

namespace {

// All positive divisors of |n|. Desk scale.
std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> divs{1};
    if (abs(n) <= 1) return divs;
    for (const auto& [q, e] : factor_integer(n)) {
        size_t base = divs.size();
        mpz_class pw = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pw *= q;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::optional<std::vector<Scalar>> split_roots_fp(const Poly& f) {
    const Field& k = f.field();
    std::uint32_t p = k.characteristic();
    // squarefree iff gcd(f, f') constant
    Poly g = Poly::gcd(f, f.derivative());
    if (g.degree() > 0) return std::nullopt;
    std::vector<Scalar> roots;
    for (std::uint32_t r = 0; r < p; ++r) {
        Scalar s(k, static_cast<long>(r));
        if (f.eval(s).is_zero()) roots.push_back(s);
    }
    if (static_cast<int>(roots.size()) != f.degree()) return std::nullopt;
    return roots;
}

std::optional<std::vector<Scalar>> split_roots_q(const Poly& f) {
    const Field k = f.field();
    // clear denominators to a primitive integer polynomial
    mpz_class den = 1;
    for (const auto& c : f.coeffs()) den = lcm(den, c.rat().get_den());
    std::vector<mpz_class> g;
    g.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        mpq_class v = c.rat() * den;
        g.push_back(v.get_num());
    }
    mpz_class cont = 0;
    for (const auto& c : g) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
    if (cont > 1)
        for (auto& c : g) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());

    std::vector<Scalar> roots;
    // strip t^k
    size_t low = 0;
    while (low < g.size() && g[low] == 0) ++low;
    if (low > 1) return std::nullopt; // root 0 with multiplicity
    if (low == 1) roots.push_back(Scalar(k, 0));
    std::vector<mpz_class> cur(g.begin() + static_cast<long>(low), g.end());

    auto eval_at = [&](const std::vector<mpz_class>& poly, const mpq_class& r) {
        mpq_class acc = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * r + mpq_class(*it);
        return acc;
    };

    while (cur.size() > 1) {
        std::vector<mpz_class> nums = divisors(cur.front());
        std::vector<mpz_class> dens = divisors(cur.back());
        std::optional<mpq_class> found;
        for (const auto& d : dens) {
            for (const auto& n : nums) {
                for (int sgn2 : {1, -1}) {
                    mpq_class r(sgn2 * n, d);
                    r.canonicalize();
                    if (eval_at(cur, r) == 0) { found = r; break; }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
        roots.push_back(Scalar::from_mpq(*found));
        // deflate by (den*t - num)
        mpz_class rn = found->get_num(), rd = found->get_den();
        // synthetic division with rational arithmetic, then re-clear denominators
        std::vector<mpq_class> quo(cur.size() - 1);
        mpq_class carry = 0;
        for (size_t i = cur.size(); i-- > 1;) {
            mpq_class coeffv = mpq_class(cur[i]) + carry;
            quo[i - 1] = coeffv;
            carry = coeffv * mpq_class(rn, rd);
            carry.canonicalize();
        }
        // remainder must be 0: cur[0] + carry == 0 guaranteed by root check
        mpz_class den2 = 1;
        for (auto& c : quo) den2 = lcm(den2, c.get_den());
        cur.clear();
        cur.reserve(quo.size());
        for (auto& c : quo) {
            mpq_class v = c * den2;
            cur.push_back(v.get_num());
        }
    }
    if (roots.size() != static_cast<size_t>(f.degree())) return std::nullopt;
    std::sort(roots.begin(), roots.end(), scalar_less);
    for (size_t i = 1; i < roots.size(); ++i)
        if (roots[i] == roots[i - 1]) return std::nullopt;
    return roots;
}

} // namespace

std::optional<std::vector<Scalar>> split_distinct_roots(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("split_distinct_roots of zero polynomial");
    if (f.degree() == 0) return std::vector<Scalar>{};
    auto roots = f.field().is_prime_field() ? split_roots_fp(f) : split_roots_q(f);
    if (!roots) return std::nullopt;
    std::sort(roots->begin(), roots->end(), scalar_less);
    // exact re-multiplication check: c * prod (t - s_i) == f
    Poly rebuilt = poly_from_roots(f.field(), *roots) * f.leading();
    if (rebuilt != f) return std::nullopt;
    return roots;
}

} // namespace wrgw
