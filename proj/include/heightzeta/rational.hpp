/*
   Copyright 2026 The heightzeta developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates. Narrowing back to 64 bits is checked: heights and Gram
// entries at desk scale stay far below the limit, and anything larger
// throws hz::overflow_error instead of wrapping.

#ifndef HEIGHTZETA_RATIONAL_HPP
#define HEIGHTZETA_RATIONAL_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "heightzeta/errors.hpp"

namespace hz {

using i64 = std::int64_t;
using i128 = __int128;

namespace detail {

inline i128 iabs128(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd128(i128 a, i128 b) {
    a = iabs128(a);
    b = iabs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 narrow(i128 x, const char* ctx) {
    if (x > i128(INT64_MAX) || x < i128(INT64_MIN)) throw overflow_error(ctx);
    return static_cast<i64>(x);
}

}  // namespace detail

/// Exact rational number, always normalized: gcd(num, den) = 1, den > 0.
class Rat {
 public:
    Rat() : num_(0), den_(1) {}
    Rat(i64 n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(i64 n, i64 d) { init(i128(n), i128(d)); }

    static Rat from128(i128 n, i128 d) {
        Rat r;
        r.init(n, d);
        return r;
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw domain_error("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ <= i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    Rat inv() const {
        if (num_ == 0) throw domain_error("inverse of zero");
        return from128(den_, num_);
    }

    /// Integer power; negative exponents invert (value must be nonzero).
    Rat pow(int e) const {
        if (e < 0) return inv().pow(-e);
        Rat acc(1);
        Rat base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base = (e > 1) ? base * base : base;
            e >>= 1;
        }
        return acc;
    }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

 private:
    void init(i128 n, i128 d) {
        if (d == 0) throw domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = detail::narrow(n, "rational numerator");
        den_ = detail::narrow(d, "rational denominator");
    }

    i64 num_;
    i64 den_;
};

/// Parse "n", "-n", or "n/d".
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        i64 n = std::stoll(s.substr(0, slash));
        i64 d = std::stoll(s.substr(slash + 1));
        return Rat(n, d);
    } catch (const std::logic_error&) {
        throw domain_error("cannot parse rational: " + s);
    }
}

}  // namespace hz

#endif  // HEIGHTZETA_RATIONAL_HPP
