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

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "arraydir/quadrature.hpp"
#include "arraydir/special_functions.hpp"
#include "test_support.hpp"

using arraydir::bessel_j0;
using arraydir::beta_half;
using arraydir::Rational;
using arraydir::sinc_radius;

TEST_SUITE_BEGIN("special_functions");

TEST_CASE("bessel_j0 reference values") {
    // frozen from a 40-digit evaluation of the defining series
    struct Ref {
        double x, j0, tol;
    };
    const Ref refs[] = {
        {0.0, 1.0, 0.0},
        {0.5, 0.9384698072408129, 1e-14},
        {1.0, 0.7651976865579666, 1e-12},
        {3.0, -0.2600519549019334, 1e-13},
        {10.0, -0.2459357644513483, 1e-13},
        {14.9, 0.006391544890852907, 1e-13},
        {15.0, -0.014224472826780773, 1e-13},
        {15.1, -0.034561851455564956, 1e-13},
        {40.0, 0.0073668905842372896, 1e-13},
        {50.0, 0.05581232766925181, 1e-12},
        {500.0, -0.0341005568807320, 1e-10},
        {1000.0, 0.0247866861524202, 1e-10},
    };
    for (const Ref &r : refs) {
        CAPTURE(r.x);
        CHECK(std::fabs(bessel_j0(r.x) - r.j0) <= std::max(r.tol, 1e-15));
    }
}

TEST_CASE("bessel_j0 first zero") {
    CHECK(std::fabs(bessel_j0(2.404825557695773)) <= 1e-10);
}

TEST_CASE("bessel_j0 is even and rejects non-finite input") {
    for (double x : {0.3, 4.7, 15.00001, 123.456}) {
        CHECK(bessel_j0(-x) == bessel_j0(x));
    }
    CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("bessel_j0 matches its integral representation") {
    // (1/2pi) int_0^2pi cos(x sin p) dp = J0(x), integral by the oracle rule
    for (double x : {0.5, 3.0, 10.0, 40.0}) {
        auto f = [x](double phi) { return std::cos(x * std::sin(phi)); };
        const arraydir::QuadratureResult q =
            arraydir::integrate_1d(f, 0.0, 2.0 * std::numbers::pi, 1e-12, 1e-13);
        CHECK(std::fabs(q.value / (2.0 * std::numbers::pi) - bessel_j0(x)) <= 1e-10);
    }
}

TEST_CASE("beta_half known exact values") {
    CHECK(beta_half(0, 0) == Rational(2));
    CHECK(beta_half(1, 0) == Rational(4, 3));
    CHECK(beta_half(1, 1) == Rational(4, 15));
    CHECK(beta_half(0, 1) == Rational(2, 3));
    CHECK(beta_half(2, 0) == Rational(16, 15));
    CHECK_THROWS_AS(beta_half(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(beta_half(0, -2), std::invalid_argument);
}

TEST_CASE("beta_half Pascal-style recurrence is exact") {
    // B(a, b) = B(a+1, b) + B(a, b+1) with a = u+1, b = v+1/2
    for (int u = 0; u <= 8; ++u)
        for (int v = 0; v <= 8; ++v)
            CHECK(beta_half(u, v) == beta_half(u + 1, v) + beta_half(u, v + 1));
}

TEST_CASE("beta_half against the defining integral") {
    // B(u+1, v+1/2) = int_0^pi sin^(2u+1) cos^2v dtheta
    for (int u = 0; u <= 3; ++u) {
        for (int v = 0; v <= 3; ++v) {
            auto f = [u, v](double t) {
                double out = std::sin(t);
                for (int i = 0; i < u; ++i)
                    out *= std::sin(t) * std::sin(t);
                for (int i = 0; i < v; ++i)
                    out *= std::cos(t) * std::cos(t);
                return out;
            };
            const arraydir::QuadratureResult q =
                arraydir::integrate_1d(f, 0.0, std::numbers::pi, 1e-12, 1e-13);
            CHECK(q.value == doctest::Approx(beta_half(u, v).to_double()).epsilon(1e-11));
        }
    }
}

TEST_CASE("sinc_radius examples") {
    CHECK(sinc_radius(0.0, 0.0) == 1.0);
    CHECK(sinc_radius(3.0, 4.0) == doctest::Approx(-0.1917848549326277).epsilon(1e-15));
    CHECK(std::fabs(sinc_radius(0.0, std::numbers::pi)) <= 1e-16);
}

TEST_CASE("sinc_radius depends only on the radius") {
    testsupport::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const double beta = rng.uniform(0.0, 30.0);
        const double z = rng.uniform(-30.0, 30.0);
        const double r = std::hypot(beta, z);
        CHECK(std::fabs(sinc_radius(beta, z) - sinc_radius(r, 0.0)) <=
              1e-15 * std::max(1.0, std::fabs(sinc_radius(r, 0.0))));
    }
}

TEST_CASE("sinc_radius series seam is continuous") {
    // straddle the 1e-4 switch point
    for (double r : {0.99e-4, 1.0e-4, 1.01e-4}) {
        const double direct = std::sin(r) / r;
        CHECK(sinc_radius(0.0, r) == doctest::Approx(direct).epsilon(1e-15));
    }
}

TEST_SUITE_END();
