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

#include "arraydir/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace arraydir {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

// Power series sum_k (-1)^k (x^2/4)^k / (k!)^2 with Kahan compensation.
// Stable in long double up to the |x| = 15 crossover (max term ~1e5 there).
double j0_series(long double ax) {
    const long double q = ax * ax * 0.25L;
    long double term = 1.0L;
    long double sum = 1.0L;
    long double comp = 0.0L;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        const long double add = (k & 1) ? -term : term;
        const long double y = add - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (term < 1.0e-26L)
            break;
    }
    return static_cast<double>(sum);
}

// Hankel asymptotic expansion:
//   J0(x) = sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)],
// with P, Q summed from the Hankel symbols (0,m) via the term recurrence
//   T_{m+1} = T_m * (-(2m+1)^2) / (8 (m+1) x),   T_0 = 1,
// truncated at the smallest term. The attainable floor ~e^{-2x} is below
// 1e-13 for x >= 15.
double j0_asymptotic(long double ax) {
    long double p = 0.0L;
    long double q = 0.0L;
    long double term = 1.0L;
    long double prev = 1e300L;
    for (int m = 0; m < 80; ++m) {
        const long double mag = std::fabs(term);
        if (mag > prev)
            break; // asymptotic minimum reached
        prev = mag;
        const long double signed_term = ((m / 2) & 1) ? -term : term;
        if (m & 1)
            q += signed_term;
        else
            p += signed_term;
        if (mag < 1.0e-20L)
            break;
        const long double odd = 2.0L * m + 1.0L;
        term *= -(odd * odd) / (8.0L * (m + 1) * ax);
    }
    const long double chi = ax - kPiL * 0.25L;
    const long double amp = std::sqrt(2.0L / (kPiL * ax));
    return static_cast<double>(amp * (p * std::cos(chi) - q * std::sin(chi)));
}

} // namespace

double bessel_j0(double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("bessel_j0: non-finite argument");
    const long double ax = std::fabs(static_cast<long double>(x));
    if (ax <= 15.0L)
        return j0_series(ax);
    return j0_asymptotic(ax);
}

Rational beta_half(int u, int v) {
    if (u < 0 || v < 0)
        throw std::invalid_argument("beta_half: negative exponent");
    // Gamma(u+1) = u!, Gamma(v+1/2) and Gamma(u+v+3/2) unwound to Gamma(1/2)
    // by Gamma(x+1) = x Gamma(x); the Gamma(1/2) factors cancel.
    Rational b(1);
    for (int i = 1; i <= u; ++i)
        b *= Rational(i);
    for (int i = 1; i <= v; ++i)
        b *= Rational(2 * i - 1, 2);
    for (int i = 1; i <= u + v + 1; ++i)
        b /= Rational(2 * i - 1, 2);
    return b;
}

double sinc_radius(double beta, double z) {
    if (!std::isfinite(beta) || !std::isfinite(z))
        throw std::invalid_argument("sinc_radius: non-finite argument");
    const double r = std::hypot(beta, z);
    if (r < 1.0e-4) {
        const double r2 = r * r;
        return 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
    }
    return std::sin(r) / r;
}

} // namespace arraydir
