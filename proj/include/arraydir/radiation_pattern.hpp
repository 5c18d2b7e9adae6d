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

#ifndef ARRAYDIR_RADIATION_PATTERN_HPP
#define ARRAYDIR_RADIATION_PATTERN_HPP

#include <array>
#include <complex>

#include "arraydir/array_model.hpp"

namespace arraydir {

/// Spherical observation/steering angle, normalized on construction:
/// phi wrapped into [0, 2*pi), theta clamped into [0, pi] with a 1e-12
/// tolerance band; anything further outside throws std::domain_error.
class Direction {
  public:
    Direction(double theta, double phi);
    double theta() const { return theta_; }
    double phi() const { return phi_; }

  private:
    double theta_;
    double phi_;
};

/// sin^u(theta) cos^v(theta). 0^0 is 1, so zero exponents degenerate to the
/// isotropic/constant factor. Signed: odd v with theta > pi/2 is negative.
double element_factor(const ElementPattern &pattern, double theta);

/// (sin t cos p, sin t sin p, cos t); unit Euclidean norm.
std::array<double, 3> unit_vector(const Direction &direction);

/// sum_n A_n exp(j (alpha_n + k r_n . a_r)).
std::complex<double> array_factor(const AntennaArray &array, const Direction &direction);

/// x_mn sin t cos p + y_mn sin t sin p + z_mn cos t + alpha_mn.
double omega(const PairGeometry &pair, const Direction &direction);

/// |element_factor * array_factor|^2 evaluated through the pair sum
///   sin^2u cos^2v [ sum A_n^2 + 2 sum_{n>m} A_n A_m cos(omega_mn) ],
/// which is always >= 0.
double radiation_intensity(const AntennaArray &array, const ElementPattern &pattern,
                           const Direction &direction);

/// Pair-sum intensity evaluator with the per-pair deltas precomputed once,
/// for sphere scans and quadrature where millions of directions share one
/// array. Pure and immutable after construction.
class IntensityProfile {
  public:
    IntensityProfile(const AntennaArray &array, const ElementPattern &pattern);

    /// Raw-angle evaluation (no Direction normalization), for quadrature nodes.
    double operator()(double theta, double phi) const;
    double at(const Direction &direction) const;

    /// Pair sum with the element factor left out: sum A_n^2 + 2 sum cos(omega).
    double array_sum(double theta, double phi) const;

    double sum_amplitude_sq() const { return sum_sq_; }
    int u() const { return u_; }
    int v() const { return v_; }

  private:
    struct PairTerm {
        double x, y, z, alpha, amp_product;
    };
    int u_;
    int v_;
    double sum_sq_ = 0.0;
    std::vector<PairTerm> pairs_;
};

} // namespace arraydir

#endif // ARRAYDIR_RADIATION_PATTERN_HPP
