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

#include "arraydir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "arraydir/radiation_pattern.hpp"
#include "arraydir/special_functions.hpp"

namespace arraydir {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxDepth = 60;

// Gauss7/Kronrod15 abscissae and weights (positive half, descending).
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct Panel {
    double value = 0.0;
    double error = 0.0;
};

// One Kronrod-15 panel with the QUADPACK-style error estimate
// err = resasc * min(1, (200 |K15 - G7| / resasc)^1.5).
template <class F>
Panel gk15(F &&f, double a, double b, std::size_t &evaluations) {
    const double half = 0.5 * (b - a);
    const double center = 0.5 * (a + b);

    double fv[15];
    const double fc = f(center);
    fv[7] = fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        fv[i] = f(center + dx);
        fv[14 - i] = f(center - dx);
    }
    evaluations += 15;

    double resk = kWgk[7] * fc;
    double resabs = std::fabs(resk);
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double sum = fv[i] + fv[14 - i];
        resk += kWgk[i] * sum;
        resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
        if (i % 2 == 1)
            resg += kWg[i / 2] * sum;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));

    Panel out;
    out.value = resk * half;
    resasc *= std::fabs(half);
    resabs *= std::fabs(half);
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round_floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    out.error = std::max(err, round_floor);
    return out;
}

template <class F>
void refine(F &&f, double a, double b, const Panel &panel, double budget, int depth,
            double &value, double &error, std::size_t &evaluations) {
    if (panel.error <= budget) {
        value += panel.value;
        error += panel.error;
        return;
    }
    if (depth >= kMaxDepth)
        throw std::runtime_error(
            "integrate_1d: maximum subdivision depth reached without convergence");
    const double mid = 0.5 * (a + b);
    const Panel left = gk15(f, a, mid, evaluations);
    const Panel right = gk15(f, mid, b, evaluations);
    refine(f, a, mid, left, 0.5 * budget, depth + 1, value, error, evaluations);
    refine(f, mid, b, right, 0.5 * budget, depth + 1, value, error, evaluations);
}

template <class F>
QuadratureResult adaptive(F &&f, double a, double b, double rel_tol, double abs_floor) {
    QuadratureResult out;
    const Panel first = gk15(f, a, b, out.evaluations);
    const double budget = std::max(rel_tol * std::fabs(first.value), abs_floor);
    refine(f, a, b, first, budget, 0, out.value, out.error_estimate, out.evaluations);
    return out;
}

void check_bounds(double a, double b, double rel_tol) {
    if (!(a < b))
        throw std::invalid_argument("integrate_1d: requires a < b");
    if (!(rel_tol >= 1.0e-13 && rel_tol <= 1.0e-2))
        throw std::invalid_argument("integrate_1d: rel_tol outside [1e-13, 1e-2]");
}

} // namespace

QuadratureResult integrate_1d(const std::function<double(double)> &f, double a, double b,
                              double rel_tol, double abs_floor) {
    check_bounds(a, b, rel_tol);
    return adaptive(f, a, b, rel_tol, abs_floor);
}

QuadratureResult normalization_numeric(const AntennaArray &array, const ElementPattern &pattern,
                                       double rel_tol) {
    check_bounds(0.0, kPi, rel_tol);
    const IntensityProfile profile(array, pattern);
    const int u = pattern.u();
    const int v = pattern.v();

    // Inner integrals get an absolute floor proportional to the element
    // factor at that theta, so near-null polar caps do not chase a relative
    // tolerance on values that contribute nothing to the total.
    const double self_scale =
        0.5 * beta_half(u, v).to_double() * profile.sum_amplitude_sq();
    const double inner_rel = 0.125 * rel_tol;
    const double outer_rel = 0.5 * rel_tol;

    double inner_error_weighted = 0.0; // sum of inner errors * sin(theta)
    std::size_t outer_calls = 0;
    std::size_t inner_evaluations = 0;

    auto outer_integrand = [&](double theta) {
        const double st = std::sin(theta);
        const double ct = std::cos(theta);
        double ef2 = 1.0;
        for (int i = 0; i < u; ++i)
            ef2 *= st * st;
        for (int i = 0; i < v; ++i)
            ef2 *= ct * ct;
        const double floor =
            std::max(0.02 * rel_tol * self_scale * std::max(ef2, 1.0e-8), 1.0e-300);
        auto inner_integrand = [&](double phi) { return profile(theta, phi); };
        const QuadratureResult inner = adaptive(inner_integrand, 0.0, kTwoPi, inner_rel, floor);
        inner_error_weighted += inner.error_estimate * st;
        ++outer_calls;
        inner_evaluations += inner.evaluations;
        return inner.value * st;
    };

    const QuadratureResult outer =
        adaptive(outer_integrand, 0.0, kPi, outer_rel, 0.05 * rel_tol * self_scale);

    QuadratureResult out;
    out.value = outer.value / (4.0 * kPi);
    // node-mean estimate of the integral of inner errors over theta
    const double inner_err_integral =
        outer_calls > 0 ? inner_error_weighted * kPi / static_cast<double>(outer_calls) : 0.0;
    out.error_estimate = (outer.error_estimate + inner_err_integral) / (4.0 * kPi);
    out.evaluations = inner_evaluations;
    return out;
}

std::pair<double, double> phi_identity_check(double a, double b, double c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
        throw std::invalid_argument("phi_identity_check: non-finite argument");
    auto integrand = [&](double phi) {
        return std::cos(a * std::cos(phi) + b * std::sin(phi) + c);
    };
    const QuadratureResult lhs = adaptive(integrand, 0.0, kTwoPi, 1.0e-11, 1.0e-12);
    const double rhs = kTwoPi * std::cos(c) * bessel_j0(std::hypot(a, b));
    return {lhs.value, rhs};
}

QuadratureResult cross_integral_numeric(int u, int v, double beta, double z, double rel_tol) {
    if (u < 0 || v < 0)
        throw std::invalid_argument("cross_integral_numeric: negative exponent");
    check_bounds(0.0, 1.0, rel_tol);
    auto integrand = [&](double x) {
        const double one_m_x2 = 1.0 - x * x;
        double poly = 1.0;
        for (int i = 0; i < v; ++i)
            poly *= x * x;
        for (int i = 0; i < u; ++i)
            poly *= one_m_x2;
        return poly * std::cos(z * x) * bessel_j0(beta * std::sqrt(std::max(0.0, one_m_x2)));
    };
    return adaptive(integrand, 0.0, 1.0, rel_tol, 1.0e-13);
}

double parity_check(int u, int v, double beta, double z, double rel_tol) {
    if (u < 0 || v < 0)
        throw std::invalid_argument("parity_check: negative exponent");
    check_bounds(-1.0, 1.0, rel_tol);
    auto integrand = [&](double x) {
        const double one_m_x2 = 1.0 - x * x;
        double poly = 1.0;
        for (int i = 0; i < v; ++i)
            poly *= x * x;
        for (int i = 0; i < u; ++i)
            poly *= one_m_x2;
        return poly * std::sin(z * x) * bessel_j0(beta * std::sqrt(std::max(0.0, one_m_x2)));
    };
    return adaptive(integrand, -1.0, 1.0, rel_tol, 1.0e-12).value;
}

} // namespace arraydir
