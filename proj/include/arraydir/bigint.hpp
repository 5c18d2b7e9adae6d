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

#ifndef ARRAYDIR_BIGINT_HPP
#define ARRAYDIR_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arraydir {

/// Signed arbitrary-precision integer (sign + base-2^32 magnitude).
///
/// Backs the rational coefficients of the symbolic derivative engine, where
/// coefficients grow combinatorially with the derivative order and would
/// silently overflow any fixed-width type.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long value); // NOLINT(google-explicit-constructor)

    // Parses an optionally signed decimal string. Throws std::invalid_argument.
    static BigInt from_string(std::string_view decimal);

    bool is_zero() const { return sign_ == 0; }
    bool is_odd() const { return sign_ != 0 && (limbs_[0] & 1u); }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt &a, const BigInt &b);
    friend BigInt operator-(const BigInt &a, const BigInt &b);
    friend BigInt operator*(const BigInt &a, const BigInt &b);

    // Truncated division: quotient rounds toward zero, remainder carries the
    // dividend's sign. Throws std::domain_error on division by zero.
    static void divrem(const BigInt &a, const BigInt &b, BigInt &quot, BigInt &rem);
    friend BigInt operator/(const BigInt &a, const BigInt &b);
    friend BigInt operator%(const BigInt &a, const BigInt &b);

    BigInt &operator+=(const BigInt &o) { return *this = *this + o; }
    BigInt &operator-=(const BigInt &o) { return *this = *this - o; }
    BigInt &operator*=(const BigInt &o) { return *this = *this * o; }

    static BigInt gcd(const BigInt &a, const BigInt &b);

    bool operator==(const BigInt &o) const = default;
    std::strong_ordering operator<=>(const BigInt &o) const;

    double to_double() const;
    long double to_long_double() const;
    std::string to_string() const;

  private:
    using Mag = std::vector<std::uint32_t>;

    int sign_ = 0; // -1, 0, +1
    Mag limbs_;    // little-endian, no leading zero limbs; empty iff zero

    BigInt(int sign, Mag mag);
    static void trim(Mag &m);
    static int cmp_mag(const Mag &a, const Mag &b);
    static Mag add_mag(const Mag &a, const Mag &b);
    static Mag sub_mag(const Mag &a, const Mag &b); // requires a >= b
    static Mag mul_mag(const Mag &a, const Mag &b);
    static void divrem_mag(const Mag &a, const Mag &b, Mag &quot, Mag &rem);
};

} // namespace arraydir

#endif // ARRAYDIR_BIGINT_HPP
