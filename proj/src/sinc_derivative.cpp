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

#include "arraydir/sinc_derivative.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace arraydir {

namespace {

long double ipow(long double base, int exp) {
    long double out = 1.0L;
    for (int i = 0; i < exp; ++i)
        out *= base;
    return out;
}

} // namespace

TermSum TermSum::seed() {
    TermSum s;
    s.terms_.push_back(Term{Rational(1), 0, 1, Trig::sin});
    return s;
}

void TermSum::canonicalize() {
    std::map<std::tuple<int, int, Trig>, Rational> merged;
    for (const Term &t : terms_)
        merged[{t.zpow, t.rpow, t.trig}] += t.coeff;
    terms_.clear();
    for (auto &[key, coeff] : merged) {
        if (coeff.is_zero())
            continue;
        terms_.push_back(Term{std::move(coeff), std::get<0>(key), std::get<1>(key),
                              std::get<2>(key)});
    }
}

TermSum TermSum::derivative() const {
    TermSum out;
    for (const Term &t : terms_) {
        if (t.zpow > 0)
            out.terms_.push_back(Term{t.coeff * Rational(t.zpow), t.zpow - 1, t.rpow, t.trig});
        out.terms_.push_back(Term{t.coeff * Rational(-t.rpow), t.zpow + 1, t.rpow + 2, t.trig});
        if (t.trig == Trig::sin)
            out.terms_.push_back(Term{t.coeff, t.zpow + 1, t.rpow + 1, Trig::cos});
        else
            out.terms_.push_back(Term{-t.coeff, t.zpow + 1, t.rpow + 1, Trig::sin});
    }
    out.canonicalize();
    return out;
}

std::string TermSum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const Term &t : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << t.coeff.to_string() << ")";
        if (t.zpow > 0)
            os << " z^" << t.zpow;
        os << " r^-" << t.rpow << " " << (t.trig == Trig::sin ? "sin(r)" : "cos(r)");
    }
    if (first)
        os << "0";
    return os.str();
}

const TermSum &derive_terms(int order) {
    if (order < 0)
        throw std::invalid_argument("derive_terms: negative order");
    static std::mutex mutex;
    static std::deque<TermSum> cache; // deque: stable references across growth
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.empty())
        cache.push_back(TermSum::seed());
    while (static_cast<int>(cache.size()) <= order)
        cache.push_back(cache.back().derivative());
    return cache[static_cast<std::size_t>(order)];
}

double eval_terms(const TermSum &terms, double beta, double z) {
    const long double r =
        std::hypot(static_cast<long double>(beta), static_cast<long double>(z));
    if (r < 0.5L)
        throw std::domain_error("eval_terms: r below series-switch threshold");
    const long double sin_r = std::sin(r);
    const long double cos_r = std::cos(r);
    const long double rinv = 1.0L / r;
    long double sum = 0.0L;
    long double comp = 0.0L;
    for (const Term &t : terms.terms()) {
        const long double value = t.coeff.to_long_double() *
                                  ipow(static_cast<long double>(z), t.zpow) *
                                  ipow(rinv, t.rpow) *
                                  (t.trig == Trig::sin ? sin_r : cos_r);
        const long double y = value - comp;
        const long double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return static_cast<double>(sum);
}

double eval_series(int p, double beta, double z) {
    if (p < 0)
        throw std::invalid_argument("eval_series: negative order");
    const long double b2 = static_cast<long double>(beta) * beta;
    const long double z2 = static_cast<long double>(z) * z;
    long double sum = 0.0L;
    long double factorial = 1.0L; // (2k+1)! running
    for (int i = 2; i <= 2 * p + 1; ++i)
        factorial *= i;
    for (int k = p; k < 500; ++k) {
        if (k > p)
            factorial *= static_cast<long double>(2 * k) * (2 * k + 1);
        // d^2p/dz^2p of (b2+z2)^k = sum_j C(k,j) b2^(k-j) (2j)!/(2j-2p)! z^(2j-2p)
        long double inner = 0.0L;
        long double binom = 1.0L; // C(k,j) starting at j = k
        long double z2pow = ipow(z2, k - p);
        for (int j = k; j >= p; --j) {
            long double falling = 1.0L;
            for (int i = 0; i < 2 * p; ++i)
                falling *= static_cast<long double>(2 * j - i);
            inner += binom * falling * z2pow;
            if (j > p) {
                binom *= static_cast<long double>(j) / (k - j + 1);
                binom *= b2; // fold b2^(k-j) growth into the binomial walk
                if (z2 != 0.0L)
                    z2pow /= z2;
                else
                    z2pow = (j - 1 == p) ? 1.0L : 0.0L;
            }
        }
        const long double bound = inner / factorial;
        sum += ((k & 1) ? -1.0L : 1.0L) * bound;
        if (k > p + 2 && bound < 1.0e-18L)
            break;
    }
    return static_cast<double>(sum);
}

double series_switch_radius(int p) {
    return std::max(1.0, std::min(8.0, 1.25 * p));
}

double sinc_derivative(int p, double beta, double z) {
    if (p < 0)
        throw std::invalid_argument("sinc_derivative: negative order");
    if (!std::isfinite(beta) || !std::isfinite(z))
        throw std::invalid_argument("sinc_derivative: non-finite argument");
    const double r = std::hypot(beta, z);
    if (r < series_switch_radius(p))
        return eval_series(p, beta, z);
    return eval_terms(derive_terms(2 * p), beta, z);
}

} // namespace arraydir
