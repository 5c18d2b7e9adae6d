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

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "arraydir/sinc_derivative.hpp"
#include "arraydir/special_functions.hpp"
#include "test_support.hpp"

using arraydir::derive_terms;
using arraydir::eval_series;
using arraydir::eval_terms;
using arraydir::Rational;
using arraydir::sinc_derivative;
using arraydir::Term;
using arraydir::TermSum;
using arraydir::Trig;

namespace {

// the order-1 and order-2 sums worked out by hand from the rewrite rules
bool has_term(const TermSum &sum, long long num, long long den, int zpow, int rpow, Trig trig) {
    for (const Term &t : sum.terms())
        if (t.zpow == zpow && t.rpow == rpow && t.trig == trig)
            return t.coeff == Rational(num, den);
    return false;
}

} // namespace

TEST_SUITE_BEGIN("sinc_derivative");

TEST_CASE("order 0 is the seed term") {
    const TermSum &s = derive_terms(0);
    REQUIRE(s.size() == 1);
    CHECK(has_term(s, 1, 1, 0, 1, Trig::sin));
}

TEST_CASE("order 1 structure") {
    const TermSum &s = derive_terms(1);
    REQUIRE(s.size() == 2);
    CHECK(has_term(s, 1, 1, 1, 2, Trig::cos));
    CHECK(has_term(s, -1, 1, 1, 3, Trig::sin));
}

TEST_CASE("order 2 collapses to the hand form at beta = 0") {
    // d2/dz2 [sin z / z] = -sin z/z - 2 cos z/z^2 + 2 sin z/z^3
    const TermSum &s = derive_terms(2);
    CHECK(s.size() == 5);
    for (double z : {1.0, 2.5, 9.0}) {
        const double expected = -std::sin(z) / z - 2.0 * std::cos(z) / (z * z) +
                                2.0 * std::sin(z) / (z * z * z);
        CHECK(eval_terms(s, 0.0, z) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("negative order rejected") {
    CHECK_THROWS_AS(derive_terms(-1), std::invalid_argument);
    CHECK_THROWS_AS(eval_series(-2, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sinc_derivative(-1, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("eval_terms examples") {
    CHECK(eval_terms(derive_terms(0), 3.0, 4.0) ==
          doctest::Approx(std::sin(5.0) / 5.0).epsilon(1e-15));
    // order-2 sum at (0, pi): -2 cos(pi)/pi^2 + 2 sin(pi)/pi^3 - sin(pi)/pi = 2/pi^2
    CHECK(eval_terms(derive_terms(2), 0.0, std::numbers::pi) ==
          doctest::Approx(0.20264236728467554).epsilon(1e-14));
}

TEST_CASE("eval_terms rejects the cancellation zone") {
    CHECK_THROWS_AS(eval_terms(derive_terms(2), 0.1, 0.2), std::domain_error);
}

TEST_CASE("order 2 equals the tabulated second-derivative bracket") {
    // bracket of the (u=0, v=1) specialized form, correct as printed
    testsupport::Rng rng(31);
    const TermSum &s = derive_terms(2);
    for (int i = 0; i < 20; ++i) {
        const double b = rng.uniform(0.1, 30.0);
        const double z = rng.uniform(-30.0, 30.0);
        const double r2 = b * b + z * z;
        if (std::sqrt(r2) < 0.6)
            continue;
        const double r = std::sqrt(r2);
        const double bracket =
            (b * b - 2.0 * z * z) * std::cos(r) / (r2 * r2) -
            ((b * b - 2.0) * z * z + b * b + z * z * z * z) * std::sin(r) / std::pow(r2, 2.5);
        CHECK(testsupport::rel_diff(eval_terms(s, b, z), bracket) <= 1e-12);
    }
}

TEST_CASE("eval_series examples") {
    for (int p = 0; p <= 8; ++p) {
        const double expected = ((p & 1) ? -1.0 : 1.0) / (2 * p + 1);
        CHECK(eval_series(p, 0.0, 0.0) == doctest::Approx(expected).epsilon(1e-16));
    }
    CHECK(eval_series(0, 0.1, 0.2) ==
          doctest::Approx(arraydir::sinc_radius(0.1, 0.2)).epsilon(1e-15));
    CHECK(eval_series(1, 0.0, 0.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-16));
}

TEST_CASE("series and term routes agree across the dispatch seam") {
    testsupport::Rng rng(77);
    for (int p = 0; p <= 4; ++p) {
        for (int i = 0; i < 25; ++i) {
            const double r = rng.uniform(0.9, 1.1);
            const double angle = rng.uniform(0.0, std::numbers::pi / 2);
            const double b = r * std::cos(angle);
            const double z = r * std::sin(angle);
            const double series = eval_series(p, b, z);
            const double terms = eval_terms(derive_terms(2 * p), b, z);
            CHECK(std::fabs(series - terms) <= 1e-11 * std::max(1.0, std::fabs(series)));
        }
    }
}

TEST_CASE("dispatch is even in z") {
    testsupport::Rng rng(13);
    for (int p = 0; p <= 5; ++p) {
        for (int i = 0; i < 10; ++i) {
            const double b = rng.uniform(0.0, 10.0);
            const double z = rng.uniform(0.0, 10.0);
            const double plus = sinc_derivative(p, b, z);
            const double minus = sinc_derivative(p, b, -z);
            CHECK(std::fabs(plus - minus) <= 1e-14 * std::max(1.0, std::fabs(plus)));
        }
    }
}

TEST_CASE("finite-difference oracle, orders 1 and 2") {
    testsupport::Rng rng(99);
    for (int i = 0; i < 20; ++i) {
        const double r = rng.uniform(2.0, 40.0);
        const double angle = rng.uniform(0.05, std::numbers::pi / 2 - 0.05);
        const double b = r * std::cos(angle);
        const double z = r * std::sin(angle);
        const double fd2 = testsupport::fd_second_derivative(b, z, 0.08);
        CHECK(testsupport::rel_diff(sinc_derivative(1, b, z), fd2) <= 1e-7);
        const double fd4 = testsupport::fd_fourth_derivative(b, z, 0.08);
        CHECK(testsupport::rel_diff(sinc_derivative(2, b, z), fd4) <= 1e-7);
    }
}

TEST_CASE("p = 0 reduces to sinc everywhere") {
    testsupport::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const double b = rng.uniform(0.0, 40.0);
        const double z = rng.uniform(-40.0, 40.0);
        CHECK(sinc_derivative(0, b, z) ==
              doctest::Approx(arraydir::sinc_radius(b, z)).epsilon(1e-13));
    }
}

TEST_CASE("derivation of order 20 is fast and has the expected term count") {
    const auto start = std::chrono::steady_clock::now();
    const TermSum &s = derive_terms(20);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(s.size() == 176); // grows ~ order^2 / 2
    CHECK(derive_terms(2).size() == 5);
    CHECK(derive_terms(4).size() == 12);
    CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() < 1000);
}

TEST_CASE("memo is safe under concurrent construction") {
    std::vector<std::thread> pool;
    std::vector<const TermSum *> seen(8, nullptr);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&seen, t] { seen[static_cast<std::size_t>(t)] = &derive_terms(16); });
    for (std::thread &t : pool)
        t.join();
    for (const TermSum *p : seen) {
        REQUIRE(p != nullptr);
        CHECK(p == seen[0]); // one construction, shared storage
    }
}

TEST_SUITE_END();
