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

#ifndef HEIGHTZETA_ANALYTIC_HPP
#define HEIGHTZETA_ANALYTIC_HPP

#include <cmath>
#include <complex>

namespace hz {

using cplx = std::complex<double>;

/// A complex value together with a bound on its absolute error. Every
/// numerical-analysis operation in the library returns one of these; the
/// bound is either rigorous or conservatively estimated as declared by
/// the producing operation's contract.
struct AnalyticValue {
    cplx value{0.0, 0.0};
    double abs_error = 0.0;

    AnalyticValue() = default;
    AnalyticValue(cplx v, double e) : value(v), abs_error(e) {}

    double real() const { return value.real(); }
    double imag() const { return value.imag(); }
    double mod() const { return std::abs(value); }
};

inline AnalyticValue av_add(const AnalyticValue& a, const AnalyticValue& b) {
    return {a.value + b.value, a.abs_error + b.abs_error};
}

inline AnalyticValue av_sub(const AnalyticValue& a, const AnalyticValue& b) {
    return {a.value - b.value, a.abs_error + b.abs_error};
}

inline AnalyticValue av_mul(const AnalyticValue& a, const AnalyticValue& b) {
    double e = a.mod() * b.abs_error + b.mod() * a.abs_error +
               a.abs_error * b.abs_error;
    return {a.value * b.value, e};
}

inline AnalyticValue av_scale(const AnalyticValue& a, cplx c) {
    return {a.value * c, a.abs_error * std::abs(c)};
}

/// Quotient a/b; requires |b| to exceed its own error bound.
inline AnalyticValue av_div(const AnalyticValue& a, const AnalyticValue& b) {
    double bm = b.mod();
    if (!(bm > b.abs_error)) return {a.value / b.value, INFINITY};
    double denom = bm - b.abs_error;
    double e = (a.abs_error + a.mod() * b.abs_error / bm) / denom;
    return {a.value / b.value, e};
}

inline AnalyticValue av_exact(cplx v) { return {v, 0.0}; }

}  // namespace hz

#endif  // HEIGHTZETA_ANALYTIC_HPP
