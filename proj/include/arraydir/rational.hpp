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

#ifndef ARRAYDIR_RATIONAL_HPP
#define ARRAYDIR_RATIONAL_HPP

#include <string>

#include "arraydir/bigint.hpp"

namespace arraydir {

/// Exact rational number: BigInt numerator over positive BigInt denominator,
/// always stored in lowest terms.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {} // NOLINT
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);

    const BigInt &num() const { return num_; }
    const BigInt &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);

    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }
    Rational &operator/=(const Rational &o) { return *this = *this / o; }

    bool operator==(const Rational &o) const = default;

    double to_double() const;
    long double to_long_double() const;
    std::string to_string() const; // "n" or "n/d"

  private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

} // namespace arraydir

#endif // ARRAYDIR_RATIONAL_HPP
