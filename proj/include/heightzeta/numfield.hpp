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

// Field invariant registry and Arakelov divisor arithmetic over Q.
// Only Q carries divisor arithmetic; Q(i) exists to exercise the complex
// place branch of the completed zeta factor.

#ifndef HEIGHTZETA_NUMFIELD_HPP
#define HEIGHTZETA_NUMFIELD_HPP

#include <cmath>
#include <map>
#include <string>

#include "heightzeta/errors.hpp"
#include "heightzeta/rational.hpp"

namespace hz {

/// Arithmetic invariants of a base number field.
struct FieldDescriptor {
    std::string label;
    int r1 = 0;               // real places
    int r2 = 0;               // complex places
    i64 discriminant = 1;
    int w = 2;                // roots of unity
    i64 class_number = 1;
    double regulator = 1.0;
    double alpha = 1.0;       // regulator * class_number
    double canonical_degree = 0.0;  // log |discriminant|
    std::map<std::string, int> local_degrees;
};

inline FieldDescriptor field_descriptor(const std::string& label) {
    if (label == "Q") {
        FieldDescriptor f;
        f.label = "Q";
        f.r1 = 1;
        f.r2 = 0;
        f.discriminant = 1;
        f.w = 2;
        f.class_number = 1;
        f.regulator = 1.0;
        f.alpha = 1.0;
        f.canonical_degree = 0.0;
        f.local_degrees = {{"oo", 1}};
        return f;
    }
    if (label == "Q(i)") {
        FieldDescriptor f;
        f.label = "Q(i)";
        f.r1 = 0;
        f.r2 = 1;
        f.discriminant = -4;
        f.w = 4;
        f.class_number = 1;
        f.regulator = 1.0;
        f.alpha = 1.0;
        f.canonical_degree = std::log(4.0);
        f.local_degrees = {{"oo", 2}};
        return f;
    }
    throw unsupported_field_error(label);
}

/// Arakelov divisor over Q: one real place plus a finite multiset of primes.
struct ArithDivisor {
    double infinite_part = 0.0;
    std::map<i64, i64> finite_part;  // prime -> multiplicity

    ArithDivisor& operator+=(const ArithDivisor& o) {
        infinite_part += o.infinite_part;
        for (const auto& [p, m] : o.finite_part) {
            i64 v = (finite_part[p] += m);
            if (v == 0) finite_part.erase(p);
        }
        return *this;
    }
    friend ArithDivisor operator+(ArithDivisor a, const ArithDivisor& b) {
        a += b;
        return a;
    }
};

namespace detail {

inline void factor_into(i64 n, i64 sign_mult, std::map<i64, i64>& out) {
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            out[p] += sign_mult;
            n /= p;
        }
    }
    if (n > 1) out[n] += sign_mult;
}

}  // namespace detail

/// Divisor of a nonzero rational: -log|f| at infinity, ord_p(f) at p.
inline ArithDivisor principal_divisor(const Rat& f) {
    if (f.is_zero()) throw domain_error("principal divisor of zero");
    ArithDivisor d;
    d.infinite_part = -std::log(std::fabs(f.to_double()));
    detail::factor_into(f.num() < 0 ? -f.num() : f.num(), +1, d.finite_part);
    detail::factor_into(f.den(), -1, d.finite_part);
    for (auto it = d.finite_part.begin(); it != d.finite_part.end();)
        it = (it->second == 0) ? d.finite_part.erase(it) : std::next(it);
    return d;
}

/// deg(D) = x_oo + sum_p m_p log p. The norm N(D) is exp of this value.
inline double divisor_degree(const ArithDivisor& d) {
    double s = d.infinite_part;
    for (const auto& [p, m] : d.finite_part)
        s += static_cast<double>(m) * std::log(static_cast<double>(p));
    return s;
}

/// Effectivity e(D): zero unless the finite part is effective, else the
/// Gaussian weight exp(-pi exp(-2 x_oo)) of the single real place of Q.
inline double effectivity(const ArithDivisor& d) {
    for (const auto& [p, m] : d.finite_part)
        if (m < 0) return 0.0;
    return std::exp(-M_PI * std::exp(-2.0 * d.infinite_part));
}

}  // namespace hz

#endif  // HEIGHTZETA_NUMFIELD_HPP
