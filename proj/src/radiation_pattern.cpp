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

#include "arraydir/radiation_pattern.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arraydir {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ipow(double base, int exp) {
    double out = 1.0;
    for (int i = 0; i < exp; ++i)
        out *= base;
    return out;
}

} // namespace

Direction::Direction(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::domain_error("Direction: non-finite angle");
    if (theta < -1.0e-12 || theta > kPi + 1.0e-12)
        throw std::domain_error("Direction: theta outside [0, pi]");
    theta_ = std::min(std::max(theta, 0.0), kPi);
    phi_ = std::fmod(phi, kTwoPi);
    if (phi_ < 0.0)
        phi_ += kTwoPi;
    if (phi_ >= kTwoPi) // fmod can land exactly on 2*pi after the wrap
        phi_ = 0.0;
}

double element_factor(const ElementPattern &pattern, double theta) {
    return ipow(std::sin(theta), pattern.u()) * ipow(std::cos(theta), pattern.v());
}

std::array<double, 3> unit_vector(const Direction &direction) {
    const double st = std::sin(direction.theta());
    return {st * std::cos(direction.phi()), st * std::sin(direction.phi()),
            std::cos(direction.theta())};
}

std::complex<double> array_factor(const AntennaArray &array, const Direction &direction) {
    const std::array<double, 3> a_r = unit_vector(direction);
    const double k = array.wavenumber();
    std::complex<double> sum = 0.0;
    for (const ArrayElement &e : array.elements()) {
        const double psi = e.phase + k * (e.x * a_r[0] + e.y * a_r[1] + e.z * a_r[2]);
        sum += e.amplitude * std::complex<double>(std::cos(psi), std::sin(psi));
    }
    return sum;
}

double omega(const PairGeometry &pair, const Direction &direction) {
    const double st = std::sin(direction.theta());
    return pair.x_mn * st * std::cos(direction.phi()) +
           pair.y_mn * st * std::sin(direction.phi()) +
           pair.z_mn * std::cos(direction.theta()) + pair.alpha_mn;
}

IntensityProfile::IntensityProfile(const AntennaArray &array, const ElementPattern &pattern)
    : u_(pattern.u()), v_(pattern.v()) {
    const std::size_t n = array.size();
    const double k = array.wavenumber();
    const auto &elems = array.elements();
    pairs_.reserve(n * (n - 1) / 2);
    for (std::size_t m = 0; m < n; ++m) {
        sum_sq_ += elems[m].amplitude * elems[m].amplitude;
        for (std::size_t j = m + 1; j < n; ++j) {
            PairTerm p;
            p.x = k * (elems[j].x - elems[m].x);
            p.y = k * (elems[j].y - elems[m].y);
            p.z = k * (elems[j].z - elems[m].z);
            p.alpha = elems[j].phase - elems[m].phase;
            p.amp_product = elems[j].amplitude * elems[m].amplitude;
            pairs_.push_back(p);
        }
    }
}

double IntensityProfile::array_sum(double theta, double phi) const {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const double cx = st * std::cos(phi);
    const double cy = st * std::sin(phi);
    double cross = 0.0;
    for (const PairTerm &p : pairs_)
        cross += p.amp_product * std::cos(p.x * cx + p.y * cy + p.z * ct + p.alpha);
    return sum_sq_ + 2.0 * cross;
}

double IntensityProfile::operator()(double theta, double phi) const {
    const double ef2 = ipow(std::sin(theta), 2 * u_) * ipow(std::cos(theta), 2 * v_);
    return ef2 * array_sum(theta, phi);
}

double IntensityProfile::at(const Direction &direction) const {
    return (*this)(direction.theta(), direction.phi());
}

double radiation_intensity(const AntennaArray &array, const ElementPattern &pattern,
                           const Direction &direction) {
    return IntensityProfile(array, pattern).at(direction);
}

} // namespace arraydir
