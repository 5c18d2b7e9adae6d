// SPDX-License-Identifier: Apache-2.0
//
// arraydir: closed-form directivity for volumetric antenna arrays
// Copyright (C) 2026 arraydir developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <stdexcept>

#include "arraydir/rational.hpp"
#include "test_support.hpp"

using arraydir::BigInt;
using arraydir::Rational;

TEST_SUITE_BEGIN("bigint");

TEST_CASE("small value round trips") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(42).to_string() == "42");
    CHECK(BigInt(-42).to_string() == "-42");
    CHECK(BigInt(1234567890123456789ll).to_string() == "1234567890123456789");
    CHECK(BigInt::from_string("-987654321987654321").to_double() ==
          doctest::Approx(-9.87654321987654321e17));
}

TEST_CASE("known large products") {
    // 2^128 and 30! as decimal strings
    BigInt two_pow_128(1);
    for (int i = 0; i < 128; ++i)
        two_pow_128 *= BigInt(2);
    CHECK(two_pow_128.to_string() == "340282366920938463463374607431768211456");

    BigInt fact(1);
    for (int i = 2; i <= 30; ++i)
        fact *= BigInt(i);
    CHECK(fact.to_string() == "265252859812191058636308480000000");
}

TEST_CASE("string parsing") {
    CHECK(BigInt::from_string("+123") == BigInt(123));
    CHECK(BigInt::from_string("000") == BigInt(0));
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12x3"), std::invalid_argument);
}

TEST_CASE("division identity on random values") {
    testsupport::Rng rng(2024);
    for (int iter = 0; iter < 500; ++iter) {
        BigInt a(0), b(0);
        const int limbs_a = rng.uniform_int(1, 9);
        const int limbs_b = rng.uniform_int(1, 6);
        for (int i = 0; i < limbs_a; ++i)
            a = a * BigInt(1ll << 32) + BigInt(static_cast<long long>(rng.next() & 0xffffffffu));
        for (int i = 0; i < limbs_b; ++i)
            b = b * BigInt(1ll << 32) + BigInt(static_cast<long long>(rng.next() & 0xffffffffu));
        if (b.is_zero())
            b = BigInt(7);
        if (rng.uniform_int(0, 1))
            a = -a;
        if (rng.uniform_int(0, 1))
            b = -b;

        BigInt q, r;
        BigInt::divrem(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero())
            CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("division on boundary limb patterns") {
    // Exhaustive 3-limb / 2-limb division over limbs picked from the values
    // that exercise the trial-quotient correction and add-back paths of the
    // long division, checked against 128-bit integer arithmetic.
    const std::uint32_t patterns[] = {0u,          1u,          2u,         0x7fffffffu,
                                      0x80000000u, 0xfffffffeu, 0xffffffffu};
    auto make = [](std::uint32_t lo, std::uint32_t mid, std::uint32_t hi) {
        return (BigInt(hi) * BigInt(1ll << 32) + BigInt(mid)) * BigInt(1ll << 32) + BigInt(lo);
    };
    for (std::uint32_t a0 : patterns)
        for (std::uint32_t a1 : patterns)
            for (std::uint32_t a2 : patterns)
                for (std::uint32_t b0 : patterns)
                    for (std::uint32_t b1 : patterns) {
                        if (b1 == 0)
                            continue; // keep the divisor at two limbs
                        const BigInt a = make(a0, a1, a2);
                        const BigInt b = BigInt(b1) * BigInt(1ll << 32) + BigInt(b0);
                        BigInt q, r;
                        BigInt::divrem(a, b, q, r);
                        const unsigned __int128 ua =
                            ((static_cast<unsigned __int128>(a2) << 64) |
                             (static_cast<unsigned __int128>(a1) << 32) | a0);
                        const unsigned __int128 ub =
                            ((static_cast<unsigned __int128>(b1) << 32) | b0);
                        const unsigned __int128 uq = ua / ub;
                        const unsigned __int128 ur = ua % ub;
                        const BigInt expect_q =
                            (BigInt(static_cast<long long>(uq >> 64)) * BigInt(1ll << 32) *
                             BigInt(1ll << 32)) +
                            BigInt(static_cast<long long>((uq >> 32) & 0xffffffffu)) *
                                BigInt(1ll << 32) +
                            BigInt(static_cast<long long>(uq & 0xffffffffu));
                        const BigInt expect_r =
                            BigInt(static_cast<long long>((ur >> 32) & 0xffffffffu)) *
                                BigInt(1ll << 32) +
                            BigInt(static_cast<long long>(ur & 0xffffffffu));
                        REQUIRE(q == expect_q);
                        REQUIRE(r == expect_r);
                    }
}

TEST_CASE("gcd basics") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    testsupport::Rng rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        const BigInt a(static_cast<long long>(rng.next() >> 16));
        const BigInt b(static_cast<long long>(rng.next() >> 16));
        const BigInt g = BigInt::gcd(a, b);
        if (!g.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
    }
}

TEST_CASE("division by zero throws") {
    BigInt q, r;
    CHECK_THROWS_AS(BigInt::divrem(BigInt(1), BigInt(0), q, r), std::domain_error);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("rational");

TEST_CASE("normalization to lowest terms") {
    const Rational half(2, 4);
    CHECK(half.num() == BigInt(1));
    CHECK(half.den() == BigInt(2));
    const Rational neg(3, -6);
    CHECK(neg.num() == BigInt(-1));
    CHECK(neg.den() == BigInt(2));
    CHECK(Rational(0, 17).den() == BigInt(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("exact arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(5, 7) / Rational(5, 7) == Rational(1));
    CHECK((-Rational(3, 4)).to_string() == "-3/4");
    CHECK(Rational(8, 4).to_string() == "2");
}

TEST_CASE("to_double accuracy") {
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    // large coefficients still convert cleanly through long double
    BigInt big(1);
    for (int i = 2; i <= 25; ++i)
        big *= BigInt(i);
    const Rational huge(big, BigInt(3));
    CHECK(huge.to_double() ==
          doctest::Approx(15511210043330985984000000.0 / 3.0).epsilon(1e-15));
}

TEST_SUITE_END();
