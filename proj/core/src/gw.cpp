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

#include "wrgw/gw.hpp"

#include <algorithm>
#include <sstream>

namespace wrgw {

Scalar reduce_square_class(const Scalar& a) {
    if (a.is_zero()) throw std::domain_error("reduce_square_class of zero");
    const Field& k = a.field();
    if (k.is_prime_field()) {
        return is_square(a) ? Scalar(k, 1) : Scalar(k, least_nonresidue(k.characteristic()));
    }
    // a ~ sign * (num*den) as integers; strip square factors cheaply
    mpz_class n = a.rat().get_num() * a.rat().get_den();
    int sign = sgn(n);
    n = abs(n);
    for (unsigned long q = 2; q < 1000ul; q = (q == 2 ? 3 : q + 2)) {
        mpz_class q2 = mpz_class(q) * q;
        while (mpz_divisible_p(n.get_mpz_t(), q2.get_mpz_t()))
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), q2.get_mpz_t());
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) n = 1;
    mpq_class out(sign < 0 ? -n : n);
    return Scalar::from_mpq(out);
}

GWClass GWClass::rank_one(const Scalar& a) {
    if (a.is_zero()) throw std::domain_error("GWClass: <0> is not a rank-1 form");
    GWClass c(a.field());
    c.gens_.push_back(reduce_square_class(a));
    return c;
}

GWClass GWClass::hyperbolic(const Field& k, int n) {
    GWClass c(k);
    for (int i = 0; i < n; ++i) {
        c.gens_.emplace_back(k, 1);
        c.gens_.emplace_back(k, -1);
    }
    return c;
}

GWClass GWClass::operator+(const GWClass& o) const {
    GWClass c(*this);
    c += o;
    return c;
}

GWClass& GWClass::operator+=(const GWClass& o) {
    if (field_ != o.field_)
        throw std::invalid_argument("GWClass: field mismatch in sum");
    gens_.insert(gens_.end(), o.gens_.begin(), o.gens_.end());
    return *this;
}

Scalar GWClass::discriminant_value() const {
    if (gens_.empty()) throw std::domain_error("GWClass::discriminant of the empty class");
    Scalar d(field_, 1);
    for (const auto& g : gens_) d *= g;
    return d;
}

SquareClass GWClass::discriminant() const { return square_class(discriminant_value()); }

std::optional<int> GWClass::signature() const {
    if (!field_.is_rational()) return std::nullopt;
    int s = 0;
    for (const auto& g : gens_) s += g.sign();
    return s;
}

GWClass::Verdict GWClass::equals_hyperbolic_multiple(int n) const {
    if (n < 0) throw std::invalid_argument("equals_hyperbolic_multiple: n must be >= 0");
    if (rank() != 2 * n) return Verdict::False;
    if (n == 0) return Verdict::True;
    Scalar disc = discriminant_value();
    Scalar want = Scalar(field_, (n % 2) ? -1 : 1);
    bool disc_ok = same_square_class(disc, want);
    if (field_.is_prime_field())
        return disc_ok ? Verdict::True : Verdict::False;
    // Q: try to pair <a> with <-a * square>
    int sig = *signature();
    std::vector<bool> used(gens_.size(), false);
    bool paired_all = true;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (used[i]) continue;
        bool found = false;
        for (std::size_t j = i + 1; j < gens_.size(); ++j) {
            if (used[j]) continue;
            if (same_square_class(gens_[i], -gens_[j])) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) { paired_all = false; break; }
    }
    if (paired_all) return Verdict::True;
    if (disc_ok && sig == 0) return Verdict::InvariantsConsistent;
    return Verdict::False;
}

std::string GWClass::str() const {
    std::ostringstream out;
    out << "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out << ",";
        if (field_.is_rational()) out << gens_[i].str();
        else out << gens_[i].residue();
    }
    out << ">";
    return out.str();
}

std::string GWClass::str_canonical() const {
    if (rank() % 2 == 0 && equals_hyperbolic_multiple(rank() / 2) == Verdict::True)
        return std::to_string(rank() / 2) + "*H";
    std::ostringstream out;
    out << str() << " (rank " << rank();
    if (rank() > 0) out << ", disc " << discriminant().str();
    if (auto sig = signature()) out << ", signature " << *sig;
    out << ")";
    return out.str();
}

std::string verdict_str(GWClass::Verdict v) {
    switch (v) {
        case GWClass::Verdict::True: return "True";
        case GWClass::Verdict::False: return "False";
        case GWClass::Verdict::InvariantsConsistent: return "InvariantsConsistent";
    }
    return "?";
}

} // namespace wrgw
