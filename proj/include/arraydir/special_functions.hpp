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

#ifndef ARRAYDIR_SPECIAL_FUNCTIONS_HPP
#define ARRAYDIR_SPECIAL_FUNCTIONS_HPP

#include "arraydir/rational.hpp"

namespace arraydir {

/// Bessel function of the first kind, order zero.
///
/// Implemented in-repo so the accuracy budget is auditable: compensated
/// long-double power series for |x| <= 15, Hankel asymptotic expansion with
/// phase/amplitude series beyond. Absolute error <= 1e-12 for |x| <= 50 and
/// <= 1e-10 for |x| <= 1000; even in x. Throws std::invalid_argument for
/// non-finite input.
double bessel_j0(double x);

/// Exact B(u+1, v+1/2) for integer u, v >= 0, built from the Gamma recurrence
/// with the sqrt(pi) factors cancelled symbolically. The result is rational
/// so the normalization self term introduces zero rounding.
/// Throws std::invalid_argument for negative input.
Rational beta_half(int u, int v);

/// sin(r)/r at r = sqrt(beta^2 + z^2): 1 at r = 0 (removable singularity),
/// series 1 - r^2/6 + r^4/120 below r = 1e-4 to avoid cancellation.
double sinc_radius(double beta, double z);

} // namespace arraydir

#endif // ARRAYDIR_SPECIAL_FUNCTIONS_HPP
