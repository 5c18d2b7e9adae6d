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

#ifndef ARRAYDIR_QUADRATURE_HPP
#define ARRAYDIR_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <utility>

#include "arraydir/array_model.hpp"

namespace arraydir {

// Independent numerical integration of every integral the closed form
// replaces. Defaults are tighter (1e-10) than typically needed so oracle
// error never masks closed-form bugs.

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; // <= requested tolerance on success
    std::size_t evaluations = 0;
};

/// Adaptive bisection with the embedded Gauss7/Kronrod15 pair. Meets
/// rel_tol * |integral| (or abs_floor, whichever is larger) or throws
/// std::runtime_error after 60 subdivision levels; deterministic for a
/// fixed input. Requires a < b and rel_tol in [1e-13, 1e-2].
QuadratureResult integrate_1d(const std::function<double(double)> &f, double a, double b,
                              double rel_tol, double abs_floor = 0.0);

/// (1/4pi) int_0^2pi int_0^pi |pattern|^2 sin(theta) dtheta dphi by iterated
/// 1-D adaptive quadrature (phi inner, theta outer) of the pair-sum
/// radiation intensity. Shares no code path with the closed form beyond
/// that pair sum.
QuadratureResult normalization_numeric(const AntennaArray &array, const ElementPattern &pattern,
                                       double rel_tol = 1.0e-10);

/// { int_0^2pi cos(a cos p + b sin p + c) dp  (by quadrature),
///   2 pi cos(c) J0(sqrt(a^2+b^2))            (closed identity) }.
std::pair<double, double> phi_identity_check(double a, double b, double c);

/// int_0^1 x^2v (1-x^2)^u cos(z x) J0(beta sqrt(1-x^2)) dx: the cross-term
/// kernel integrated directly, an oracle for the derivative engine that
/// involves no differentiation at all.
QuadratureResult cross_integral_numeric(int u, int v, double beta, double z,
                                        double rel_tol = 1.0e-10);

/// int_{-1}^1 x^2v (1-x^2)^u sin(z x) J0(beta sqrt(1-x^2)) dx: odd integrand
/// on a symmetric interval, must vanish (|value| <= 1e-10).
double parity_check(int u, int v, double beta, double z, double rel_tol = 1.0e-10);

} // namespace arraydir

#endif // ARRAYDIR_QUADRATURE_HPP
