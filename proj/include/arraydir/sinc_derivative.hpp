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

#ifndef ARRAYDIR_SINC_DERIVATIVE_HPP
#define ARRAYDIR_SINC_DERIVATIVE_HPP

#include <string>
#include <vector>

#include "arraydir/rational.hpp"

namespace arraydir {

// Exact d^n/dz^n of sin(r)/r with r = sqrt(beta^2 + z^2).
//
// The basis { z^a r^-q sin(r), z^a r^-q cos(r) } is closed under d/dz, so
// every derivative is a finite sum of such terms with exact rational
// coefficients. beta enters only through r at evaluation time.

enum class Trig { sin, cos };

struct Term {
    Rational coeff; // nonzero in stored sums
    int zpow = 0;   // power of z, >= 0
    int rpow = 1;   // power of r^-1, >= 1
    Trig trig = Trig::sin;
};

/// Canonical term sum: merged by (zpow, rpow, trig), sorted, zeros dropped.
class TermSum {
  public:
    /// sin(r)/r itself: { +1 * z^0 * r^-1 * sin }.
    static TermSum seed();

    /// One application of d/dz under the rewrite rules
    ///   d(z^a) = a z^(a-1),  d(r^-q) = -q z r^(-q-2),
    ///   d(sin r) = z r^-1 cos r,  d(cos r) = -z r^-1 sin r.
    TermSum derivative() const;

    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    std::string to_string() const;

  private:
    std::vector<Term> terms_;
    void canonicalize();
};

/// Exact symbolic d^order/dz^order of sin(r)/r. Memoized; concurrent callers
/// for the same order observe exactly one construction.
/// Throws std::invalid_argument for negative order.
const TermSum &derive_terms(int order);

/// Numeric evaluation of a term sum, accumulated in long double.
/// Throws std::domain_error below r = 0.5 where the r^-q factors produce
/// catastrophic cancellation; callers must use eval_series there.
double eval_terms(const TermSum &terms, double beta, double z);

/// d^2p/dz^2p of sin(r)/r by termwise differentiation of the entire series
/// sin(sqrt(w))/sqrt(w) = sum_k (-1)^k w^k / (2k+1)!, w = beta^2 + z^2,
/// truncated when the term bound drops below 1e-18. Intended for small r;
/// valid everywhere but cancellation-prone for large r.
double eval_series(int p, double beta, double z);

/// d^2p/dz^2p [sin(r)/r]: dispatches to eval_series below the order-dependent
/// switch radius and to eval_terms(derive_terms(2p)) above it. Even in z.
double sinc_derivative(int p, double beta, double z);

/// Radius below which sinc_derivative uses the series route for order-2p
/// derivatives: max(1, min(8, 1.25 p)). The term basis cancels ~p digits
/// near r ~ 1 at high p; the series is uniformly accurate below r ~ 8.
double series_switch_radius(int p);

} // namespace arraydir

#endif // ARRAYDIR_SINC_DERIVATIVE_HPP
