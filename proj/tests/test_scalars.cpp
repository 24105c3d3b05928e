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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrgw/field.hpp"
#include "wrgw/rng.hpp"

using namespace wrgw;

namespace {

Scalar random_scalar(const Field& k, SplitMix64& rng) {
    if (k.is_prime_field())
        return Scalar(k, static_cast<long>(rng.below(k.characteristic())));
    long num = rng.in_box(50);
    long den = 1 + static_cast<long>(rng.below(9));
    return Scalar::fraction(k, num, den);
}

} // namespace

TEST_CASE("field construction and parsing") {
    CHECK(Field::rationals().is_rational());
    CHECK(Field::prime(7).characteristic() == 7);
    CHECK_THROWS(static_cast<void>(Field::prime(2)));
    CHECK_THROWS(static_cast<void>(Field::prime(9)));
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK(Field::parse("Fp:11") == Field::prime(11));
    CHECK(Field::parse("F11") == Field::prime(11));
    CHECK_THROWS(static_cast<void>(Field::parse("Fp:8")));
}

TEST_CASE("factorial invertibility") {
    CHECK(factorial_invertible(3, Field::rationals()));
    CHECK(factorial_invertible(3, Field::prime(7)));
    CHECK_FALSE(factorial_invertible(7, Field::prime(7)));
    CHECK_FALSE(factorial_invertible(11, Field::prime(7)));
}

TEST_CASE("field axioms on random samples") {
    SplitMix64 rng(42);
    for (const Field& k : {Field::rationals(), Field::prime(11), Field::prime(101)}) {
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = random_scalar(k, rng);
            Scalar b = random_scalar(k, rng);
            Scalar c = random_scalar(k, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar(k, 1));
                CHECK(a / a == Scalar(k, 1));
            }
            CHECK(a + (-a) == Scalar(k));
        }
    }
}

TEST_CASE("canonical form is unique") {
    Field q = Field::rationals();
    CHECK(Scalar::fraction(q, 2, 4) == Scalar::fraction(q, 1, 2));
    CHECK(Scalar::fraction(q, -1, -2) == Scalar::fraction(q, 1, 2));
    CHECK(Scalar::fraction(q, 3, -6) == Scalar::fraction(q, -1, 2));
    Field f7 = Field::prime(7);
    CHECK(Scalar(f7, 10) == Scalar(f7, 3));
    CHECK(Scalar(f7, -1) == Scalar(f7, 6));
}

TEST_CASE("square class of fixed examples") {
    Field q = Field::rationals();
    // 4 is a perfect square
    SquareClass c4 = square_class(Scalar(q, 4));
    CHECK(c4.sign == 1);
    CHECK(c4.squarefree == 1);
    // -1: sign case
    SquareClass cm1 = square_class(Scalar(q, -1));
    CHECK(cm1.sign == -1);
    CHECK(cm1.squarefree == 1);
    // 3 over F7 is a non-residue (3^3 = 27 = 6 = -1 mod 7)
    Field f7 = Field::prime(7);
    CHECK_FALSE(square_class(Scalar(f7, 3)).is_residue);
    CHECK(square_class(Scalar(f7, 2)).is_residue);
    CHECK_THROWS_WITH(static_cast<void>(square_class(Scalar(q))), doctest::Contains("zero"));
}

TEST_CASE("square_class(a b^2) == square_class(a)") {
    SplitMix64 rng(7);
    for (const Field& k : {Field::rationals(), Field::prime(13)}) {
        for (int trial = 0; trial < 100; ++trial) {
            Scalar a = random_scalar(k, rng);
            Scalar b = random_scalar(k, rng);
            if (a.is_zero() || b.is_zero()) continue;
            CHECK(square_class(a * b * b) == square_class(a));
            CHECK(same_square_class(a * b * b, a));
        }
    }
}

TEST_CASE("exactly (p-1)/2 residues are squares, p <= 101") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 31u, 97u, 101u}) {
        Field k = Field::prime(p);
        unsigned residues = 0;
        for (std::uint32_t a = 1; a < p; ++a)
            if (is_square(Scalar(k, static_cast<long>(a)))) ++residues;
        CHECK(residues == (p - 1) / 2);
    }
}

TEST_CASE("same_square_class agrees with canonical tags") {
    SplitMix64 rng(99);
    for (const Field& k : {Field::rationals(), Field::prime(11)}) {
        for (int trial = 0; trial < 100; ++trial) {
            Scalar a = random_scalar(k, rng);
            Scalar b = random_scalar(k, rng);
            if (a.is_zero() || b.is_zero()) continue;
            CHECK(same_square_class(a, b) == (square_class(a) == square_class(b)));
        }
    }
}

TEST_CASE("squarefree part on moderately large inputs") {
    mpz_class n("123456789012345678901234");
    mpz_class sf = squarefree_part(n * n * 15);
    CHECK(sf == 15);
    CHECK(squarefree_part(mpz_class(1)) == 1);
    CHECK(squarefree_part(mpz_class(8)) == 2);
}

TEST_CASE("text rendering and parsing round-trips") {
    Field q = Field::rationals();
    Field f7 = Field::prime(7);
    CHECK(Scalar::fraction(q, -3, 4).str() == "-3/4");
    CHECK(Scalar(q, 5).str() == "5");
    CHECK(Scalar(f7, 3).str() == "3 mod 7");
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Scalar a = random_scalar(q, rng);
        CHECK(Scalar::parse(q, a.str()) == a);
        Scalar b = random_scalar(f7, rng);
        CHECK(Scalar::parse(f7, b.str()) == b);
    }
    CHECK(Scalar::parse(f7, "10") == Scalar(f7, 3));
    CHECK_THROWS(static_cast<void>(Scalar::parse(Field::prime(11), "3 mod 7")));
}

TEST_CASE("least nonresidue") {
    CHECK(least_nonresidue(7) == 3);
    CHECK(least_nonresidue(11) == 2);
    CHECK(least_nonresidue(5) == 2);
}
