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

#include "arraydir/directivity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "arraydir/sinc_derivative.hpp"
#include "arraydir/special_functions.hpp"

namespace arraydir {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int k) {
    long double out = 1.0L;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return static_cast<double>(out);
}

unsigned resolve_worker_count(unsigned requested) {
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("ARRAYDIR_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0)
            return static_cast<unsigned>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

} // namespace

double to_dbi(double linear) {
    if (linear <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(linear);
}

double normalization_self(const AntennaArray &array, const ElementPattern &pattern) {
    double sum_sq = 0.0;
    for (const ArrayElement &e : array.elements())
        sum_sq += e.amplitude * e.amplitude;
    return 0.5 * beta_half(pattern.u(), pattern.v()).to_double() * sum_sq;
}

double normalization_cross(const AntennaArray &array, const ElementPattern &pattern) {
    const int u = pattern.u();
    const int v = pattern.v();
    const std::size_t n = array.size();
    long double cross = 0.0L;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t j = m + 1; j <= n; ++j) {
            const PairGeometry pg = pair_geometry(array, m, j);
            const double amp = array.elements()[m - 1].amplitude *
                               array.elements()[j - 1].amplitude;
            if (amp == 0.0)
                continue;
            const double weight = amp * std::cos(pg.alpha_mn);
            long double pair_sum = 0.0L;
            for (int kappa = 0; kappa <= u; ++kappa)
                pair_sum += binomial(u, kappa) *
                            sinc_derivative(v + u - kappa, pg.beta, pg.z_mn);
            cross += weight * pair_sum;
        }
    }
    const double sign = (v % 2 == 0) ? 1.0 : -1.0; // (-1)^(v+2u) = (-1)^v
    return 2.0 * sign * static_cast<double>(cross);
}

NormalizationBreakdown normalization(const AntennaArray &array, const ElementPattern &pattern) {
    NormalizationBreakdown out;
    out.self_term = normalization_self(array, pattern);
    out.cross_term = normalization_cross(array, pattern);
    out.total = out.self_term + out.cross_term;
    if (!(out.total > 0.0))
        throw std::runtime_error("normalization: non-positive total (degenerate configuration)");
    return out;
}

DirectivityResult directivity(const AntennaArray &array, const ElementPattern &pattern,
                              const Direction &direction, const NormalizationBreakdown &norm) {
    DirectivityResult out{0.0, 0.0, direction, norm};
    out.linear = radiation_intensity(array, pattern, direction) / norm.total;
    out.dbi = to_dbi(out.linear);
    return out;
}

DirectivityResult directivity(const AntennaArray &array, const ElementPattern &pattern,
                              const Direction &direction) {
    return directivity(array, pattern, direction, normalization(array, pattern));
}

namespace {

// Verbatim specialized brackets. r2 = beta^2 + z^2 must be positive; the
// general engine, not these, handles co-located pairs.
double t2_bracket(double b, double z) {
    const double b2 = b * b, z2 = z * z;
    const double r2 = b2 + z2;
    const double r = std::sqrt(r2);
    return (b2 - 2.0 * z2) * std::cos(r) / (r2 * r2) -
           ((b2 - 2.0) * z2 + b2 + z2 * z2) * std::sin(r) / std::pow(r2, 2.5);
}

double t3_bracket(double b, double z) {
    const double b2 = b * b, z2 = z * z;
    const double r2 = b2 + z2;
    const double r = std::sqrt(r2);
    const double b4 = b2 * b2, b6 = b4 * b2;
    const double z4 = z2 * z2;
    const double psi1 = (b6 * (-(z2 - 2.0)) - b4 * (4.0 * z4 + 27.0 * z2 + 9.0) -
                         b2 * z2 * (5.0 * z4 + 15.0 * z2 - 72.0) -
                         2.0 * z4 * (z4 - 7.0 * z2 + 12.0)) *
                        std::sin(r) / std::pow(r2, 4.5);
    const double psi2 = (b6 + 3.0 * b4 * (2.0 * z2 + 3.0) - b2 * z2 * (z2 + 72.0) -
                         6.0 * z4 * (z2 - 4.0)) *
                        std::cos(r) / std::pow(r2, 4.0);
    return psi1 + psi2;
}

double t4_bracket(double b, double z) {
    const double b2 = b * b, z2 = z * z;
    const double r2 = b2 + z2;
    const double r = std::sqrt(r2);
    const double b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4, b10 = b8 * b2;
    const double z4 = z2 * z2, z6 = z4 * z2;
    const double psi3 =
        std::sin(r) *
        (-3.0 * b10 + b8 * (z4 - 24.0 * z2 - 81.0) +
         b6 * (5.0 * z6 + 114.0 * z4 + 1611.0 * z2 + 225.0) +
         3.0 * b4 * z2 * (3.0 * z6 + 82.0 * z4 - 292.0 * z2 - 1350.0) +
         b2 * z4 * (7.0 * z6 + 69.0 * z4 - 2184.0 * z2 + 5400.0) +
         2.0 * z6 * (z6 - 21.0 * z4 + 192.0 * z2 - 360.0)) /
        std::pow(r2, 6.5);
    const double psi4 =
        std::cos(r) *
        (6.0 * b8 * (z2 - 1.0) + b6 * (29.0 * z4 + 336.0 * z2 + 225.0) +
         6.0 * b4 * z2 * (5.0 * z4 - 71.0 * z2 - 675.0) -
         3.0 * b2 * z4 * (z4 + 208.0 * z2 - 1800.0) -
         2.0 * z6 * (5.0 * z4 - 72.0 * z2 + 360.0)) /
        std::pow(r2, 6.0);
    return psi3 + psi4;
}

} // namespace

double specialized_normalization(const AntennaArray &array, SpecializedCase which) {
    double sum_sq = 0.0;
    for (const ArrayElement &e : array.elements())
        sum_sq += e.amplitude * e.amplitude;

    double self = 0.0;
    double cross_sign = 1.0;
    double (*bracket)(double, double) = nullptr;
    switch (which) {
    case SpecializedCase::T1:
        self = sum_sq;
        bracket = +[](double b, double z) { return sinc_radius(b, z); };
        break;
    case SpecializedCase::T2:
        self = sum_sq / 3.0;
        cross_sign = -1.0;
        bracket = t2_bracket;
        break;
    case SpecializedCase::T3:
        self = 2.0 * sum_sq / 3.0;
        bracket = t3_bracket;
        break;
    case SpecializedCase::T4:
        self = 2.0 * sum_sq / 15.0;
        bracket = t4_bracket;
        break;
    }

    const std::size_t n = array.size();
    long double cross = 0.0L;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t j = m + 1; j <= n; ++j) {
            const PairGeometry pg = pair_geometry(array, m, j);
            const double amp = array.elements()[m - 1].amplitude *
                               array.elements()[j - 1].amplitude;
            cross += amp * std::cos(pg.alpha_mn) * bracket(pg.beta, pg.z_mn);
        }
    }
    return self + cross_sign * 2.0 * static_cast<double>(cross);
}

double ScanResult::theta_at(std::size_t i) const {
    return static_cast<double>(i) * kPi / static_cast<double>(theta_steps - 1);
}

double ScanResult::phi_at(std::size_t j) const {
    return static_cast<double>(j) * 2.0 * kPi / static_cast<double>(phi_steps);
}

double ScanResult::linear_at(std::size_t i, std::size_t j) const {
    return linear[i * phi_steps + j];
}

Direction ScanResult::argmax_direction() const {
    return Direction(theta_at(argmax_index / phi_steps), phi_at(argmax_index % phi_steps));
}

ScanResult scan(const AntennaArray &array, const ElementPattern &pattern,
                std::size_t theta_steps, std::size_t phi_steps, unsigned threads) {
    if (theta_steps < 2 || phi_steps < 2)
        throw std::invalid_argument("scan: needs at least 2 steps per axis");

    ScanResult result;
    result.theta_steps = theta_steps;
    result.phi_steps = phi_steps;
    result.breakdown = normalization(array, pattern);
    result.linear.assign(theta_steps * phi_steps, 0.0);

    const IntensityProfile profile(array, pattern);
    const double inv_total = 1.0 / result.breakdown.total;

    const unsigned workers =
        std::min<unsigned>(resolve_worker_count(threads), static_cast<unsigned>(theta_steps));
    auto fill_rows = [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t i = row_begin; i < row_end; ++i) {
            const double theta = static_cast<double>(i) * kPi / static_cast<double>(theta_steps - 1);
            double *row = result.linear.data() + i * phi_steps;
            for (std::size_t j = 0; j < phi_steps; ++j) {
                const double phi = static_cast<double>(j) * 2.0 * kPi / static_cast<double>(phi_steps);
                row[j] = profile(theta, phi) * inv_total;
            }
        }
    };

    if (workers <= 1) {
        fill_rows(0, theta_steps);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (theta_steps + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = std::min<std::size_t>(w * chunk, theta_steps);
            const std::size_t end = std::min<std::size_t>(begin + chunk, theta_steps);
            if (begin < end)
                pool.emplace_back(fill_rows, begin, end);
        }
        for (std::thread &t : pool)
            t.join();
    }

    // serial reduction so ties resolve to the first grid point in row-major order
    std::size_t best = 0;
    for (std::size_t idx = 1; idx < result.linear.size(); ++idx)
        if (result.linear[idx] > result.linear[best])
            best = idx;
    result.argmax_index = best;
    return result;
}

} // namespace arraydir
