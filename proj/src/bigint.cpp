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

#include "arraydir/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace arraydir {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0)
        return;
    sign_ = value > 0 ? 1 : -1;
    // avoid UB on LLONG_MIN by widening before negation
    auto mag = static_cast<std::uint64_t>(value > 0 ? value : -(value + 1));
    if (value < 0)
        mag += 1;
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    if (mag >> 32)
        limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt::BigInt(int sign, Mag mag) : sign_(sign), limbs_(std::move(mag)) {
    trim(limbs_);
    if (limbs_.empty())
        sign_ = 0;
}

BigInt BigInt::from_string(std::string_view decimal) {
    if (decimal.empty())
        throw std::invalid_argument("BigInt::from_string: empty string");
    int sign = 1;
    std::size_t i = 0;
    if (decimal[0] == '+' || decimal[0] == '-') {
        sign = decimal[0] == '-' ? -1 : 1;
        i = 1;
    }
    if (i == decimal.size())
        throw std::invalid_argument("BigInt::from_string: no digits");
    BigInt result;
    const BigInt ten(10);
    for (; i < decimal.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(decimal[i])))
            throw std::invalid_argument("BigInt::from_string: invalid digit");
        result = result * ten + BigInt(decimal[i] - '0');
    }
    if (sign < 0)
        result = -result;
    return result;
}

void BigInt::trim(Mag &m) {
    while (!m.empty() && m.back() == 0)
        m.pop_back();
}

int BigInt::cmp_mag(const Mag &a, const Mag &b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

BigInt::Mag BigInt::add_mag(const Mag &a, const Mag &b) {
    Mag out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size())
            s += a[i];
        if (i < b.size())
            s += b[i];
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry)
        out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

BigInt::Mag BigInt::sub_mag(const Mag &a, const Mag &b) {
    Mag out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(d));
    }
    trim(out);
    return out;
}

BigInt::Mag BigInt::mul_mag(const Mag &a, const Mag &b) {
    if (a.empty() || b.empty())
        return {};
    Mag out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        out[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    trim(out);
    return out;
}

// Knuth algorithm D on 32-bit limbs with 64-bit intermediates.
void BigInt::divrem_mag(const Mag &a, const Mag &b, Mag &quot, Mag &rem) {
    quot.clear();
    rem.clear();
    if (b.empty())
        throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        rem = a;
        return;
    }
    if (b.size() == 1) {
        const std::uint64_t d = b[0];
        quot.assign(a.size(), 0);
        std::uint64_t r = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | a[i];
            quot[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        trim(quot);
        if (r)
            rem.push_back(static_cast<std::uint32_t>(r));
        return;
    }

    const int shift = std::countl_zero(b.back());
    const std::size_t n = b.size();
    const std::size_t m = a.size() - n;

    // normalized copies: u has one extra high limb
    Mag u(a.size() + 1, 0), v(n, 0);
    if (shift == 0) {
        std::copy(a.begin(), a.end(), u.begin());
        v = b;
    } else {
        for (std::size_t i = a.size(); i-- > 0;) {
            u[i + 1] |= a[i] >> (32 - shift);
            u[i] = a[i] << shift;
        }
        for (std::size_t i = n; i-- > 0;) {
            if (i + 1 < n)
                v[i + 1] |= b[i] >> (32 - shift);
            v[i] = b[i] << shift;
        }
    }

    quot.assign(m + 1, 0);
    const std::uint64_t vtop = v[n - 1];
    const std::uint64_t vnext = v[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        const std::uint64_t numer = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = numer / vtop;
        std::uint64_t rhat = numer % vtop;
        while (qhat >= kBase || qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase)
                break;
        }
        // multiply-subtract qhat*v from u[j .. j+n]
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t d = static_cast<std::int64_t>(u[i + j]) - borrow -
                             static_cast<std::int64_t>(p & 0xffffffffu);
            if (d < 0) {
                d += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(d);
        }
        std::int64_t d = static_cast<std::int64_t>(u[j + n]) - borrow -
                         static_cast<std::int64_t>(carry);
        if (d < 0) {
            // qhat was one too large: add v back once
            d += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c;
                u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                c = s >> 32;
            }
            d += static_cast<std::int64_t>(c);
            d &= 0xffffffff;
        }
        u[j + n] = static_cast<std::uint32_t>(d);
        quot[j] = static_cast<std::uint32_t>(qhat);
    }
    trim(quot);

    rem.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
    if (shift) {
        for (std::size_t i = 0; i < n; ++i) {
            rem[i] >>= shift;
            if (i + 1 < n)
                rem[i] |= u[i + 1] << (32 - shift);
        }
    }
    trim(rem);
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0)
        out.sign_ = 1;
    return out;
}

BigInt operator+(const BigInt &a, const BigInt &b) {
    if (a.sign_ == 0)
        return b;
    if (b.sign_ == 0)
        return a;
    if (a.sign_ == b.sign_)
        return BigInt(a.sign_, BigInt::add_mag(a.limbs_, b.limbs_));
    const int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    if (c == 0)
        return BigInt();
    if (c > 0)
        return BigInt(a.sign_, BigInt::sub_mag(a.limbs_, b.limbs_));
    return BigInt(b.sign_, BigInt::sub_mag(b.limbs_, a.limbs_));
}

BigInt operator-(const BigInt &a, const BigInt &b) { return a + (-b); }

BigInt operator*(const BigInt &a, const BigInt &b) {
    if (a.sign_ == 0 || b.sign_ == 0)
        return BigInt();
    return BigInt(a.sign_ * b.sign_, BigInt::mul_mag(a.limbs_, b.limbs_));
}

void BigInt::divrem(const BigInt &a, const BigInt &b, BigInt &quot, BigInt &rem) {
    Mag qm, rm;
    divrem_mag(a.limbs_, b.limbs_, qm, rm);
    const int qsign = qm.empty() ? 0 : a.sign_ * b.sign_;
    const int rsign = rm.empty() ? 0 : a.sign_;
    quot = BigInt(qsign, std::move(qm));
    rem = BigInt(rsign, std::move(rm));
}

BigInt operator/(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt &a, const BigInt &b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divrem(x, y, q, r);
        x = y;
        y = r;
    }
    return x;
}

std::strong_ordering BigInt::operator<=>(const BigInt &o) const {
    if (sign_ != o.sign_)
        return sign_ <=> o.sign_;
    const int c = sign_ >= 0 ? cmp_mag(limbs_, o.limbs_) : cmp_mag(o.limbs_, limbs_);
    return c <=> 0;
}

long double BigInt::to_long_double() const {
    long double v = 0.0L;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        v = v * 4294967296.0L + static_cast<long double>(limbs_[i]);
    return sign_ < 0 ? -v : v;
}

double BigInt::to_double() const { return static_cast<double>(to_long_double()); }

std::string BigInt::to_string() const {
    if (sign_ == 0)
        return "0";
    Mag cur = limbs_;
    std::string digits;
    const Mag billion = {1000000000u};
    while (!cur.empty()) {
        Mag q, r;
        divrem_mag(cur, billion, q, r);
        const std::uint32_t chunk = r.empty() ? 0 : r[0];
        std::string part = std::to_string(chunk);
        if (!q.empty())
            part.insert(0, 9 - part.size(), '0');
        digits.insert(0, part);
        cur = std::move(q);
    }
    return sign_ < 0 ? "-" + digits : digits;
}

} // namespace arraydir
