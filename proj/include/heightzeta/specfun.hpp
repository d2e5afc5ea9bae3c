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

// Certified evaluation of Gamma, Dedekind zeta and the completed factor
// xi(s) = 2^{-r1} (pi^{-s/2} Gamma(s/2))^{r1} ((2pi)^{-s} Gamma(s))^{r2} zeta_F(s).
//
// zeta is Euler-Maclaurin with an explicit remainder bound, valid on
// Re s >= -10, |Im s| <= 30 at the default targets. Gamma is Lanczos with
// reflection; the reduced sin(pi z) keeps the reflection well conditioned
// near the negative axis.

#ifndef HEIGHTZETA_SPECFUN_HPP
#define HEIGHTZETA_SPECFUN_HPP

#include <array>
#include <cmath>
#include <complex>

#include "heightzeta/analytic.hpp"
#include "heightzeta/errors.hpp"
#include "heightzeta/numfield.hpp"
#include "heightzeta/quadrature.hpp"

namespace hz {

namespace detail {

// sin(pi z) with the real part reduced mod 1, so the result keeps full
// relative accuracy near integers.
inline cplx sin_pi(cplx z) {
    double x = z.real();
    double y = z.imag();
    double n = std::nearbyint(x);
    double xr = x - n;
    double sign = (std::fmod(std::fabs(n), 2.0) == 1.0) ? -1.0 : 1.0;
    double re = std::sin(M_PI * xr) * std::cosh(M_PI * y);
    double im = std::cos(M_PI * xr) * std::sinh(M_PI * y);
    return sign * cplx(re, im);
}

// Lanczos approximation, g = 607/128, 15 terms.
inline cplx gamma_lanczos_right(cplx z) {
    static constexpr double kG = 4.7421875;
    static constexpr std::array<double, 15> kC = {
        0.99999999999999709182,     57.156235665862923517,
        -59.597960355475491248,     14.136097974741747174,
        -0.49191381609762019978,    0.33994649984811888699e-4,
        0.46523628927048575665e-4,  -0.98374475304879564677e-4,
        0.15808870322491248884e-3,  -0.21026444172410488319e-3,
        0.21743961811521264320e-3,  -0.16431810653676389022e-3,
        0.84418223983852743293e-4,  -0.26190838401581408670e-4,
        0.36899182659531622704e-5};
    cplx a(kC[0], 0.0);
    for (int k = 1; k < 15; ++k) a += kC[k] / (z - 1.0 + static_cast<double>(k));
    cplx t = z + (kG - 0.5);
    return std::sqrt(2.0 * M_PI) * std::exp((z - 0.5) * std::log(t) - t) * a;
}

inline bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

// Bernoulli numbers B_2, B_4, ..., B_26.
inline const std::array<double, 13>& bernoulli_even() {
    static const std::array<double, 13> kB = {
        1.0 / 6.0,          -1.0 / 30.0,          1.0 / 42.0,
        -1.0 / 30.0,        5.0 / 66.0,           -691.0 / 2730.0,
        7.0 / 6.0,          -3617.0 / 510.0,      43867.0 / 798.0,
        -174611.0 / 330.0,  854513.0 / 138.0,     -236364091.0 / 2730.0,
        8553103.0 / 6.0};
    return kB;
}

}  // namespace detail

/// Gamma(s). Relative accuracy ~1e-14 on -10 <= Re s <= 30, |Im s| <= 30;
/// the declared bound is the contractual 1e-12 |Gamma(s)| with headroom.
inline AnalyticValue gamma(cplx s) {
    if (detail::is_nonpositive_integer(s))
        throw pole_error("Gamma at nonpositive integer");
    cplx v;
    if (s.real() >= 0.5) {
        v = detail::gamma_lanczos_right(s);
    } else {
        cplx sp = detail::sin_pi(s);
        v = M_PI / (sp * detail::gamma_lanczos_right(1.0 - s));
    }
    return {v, 1e-12 * std::abs(v)};
}

/// Hurwitz zeta(s, a) for a > 0 by Euler-Maclaurin with an explicit
/// remainder bound; N adapts until the bound meets the target.
inline AnalyticValue hurwitz_zeta(cplx s, double a, double target = 5e-14) {
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-12)
        throw pole_error("zeta at s = 1");
    const double sigma = s.real();
    const auto& bern = detail::bernoulli_even();
    const int order = 12;  // pairs B_2 .. B_24, remainder from B_26

    int n = std::max<int>(12, static_cast<int>(1.2 * std::fabs(s.imag())) + 8);
    for (;;) {
        // remainder bound: |B_{2K+2}/(2K+2)!| |(s)_{2K+1}| (N+a)^{-sigma-2K-1}
        //                  * |s+2K+1| / (sigma+2K+1)
        double log_rise = 0.0;
        for (int j = 0; j <= 2 * order; ++j)
            log_rise += std::log(std::abs(s + static_cast<double>(j)));
        double log_fact = std::lgamma(2.0 * order + 3.0);
        double log_b = std::log(std::fabs(bern[order]));
        double log_np = (-sigma - 2.0 * order - 1.0) * std::log(n + a);
        double cond = std::abs(s + (2.0 * order + 1.0)) / (sigma + 2.0 * order + 1.0);
        double bound = std::exp(log_b - log_fact + log_rise + log_np) * cond;
        if (bound <= target || n >= (1 << 20)) {
            cplx sum(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                sum += std::exp(-s * std::log(static_cast<double>(k) + a));
            double na = n + a;
            cplx lna = std::log(na);
            sum += std::exp((1.0 - s) * lna) / (s - 1.0);
            sum += 0.5 * std::exp(-s * lna);
            cplx rise(1.0, 0.0);
            double fact = 1.0;
            for (int j = 1; j <= order; ++j) {
                // rising factorial s(s+1)...(s+2j-2) and (2j)!
                if (j == 1) {
                    rise = s;
                    fact = 2.0;
                } else {
                    rise *= (s + (2.0 * j - 3.0)) * (s + (2.0 * j - 2.0));
                    fact *= (2.0 * j - 1.0) * (2.0 * j);
                }
                sum += bern[j - 1] / fact * rise *
                       std::exp((-s - (2.0 * j - 1.0)) * lna);
            }
            // roundoff allowance scaled by the largest term magnitude
            double max_term =
                std::max({1.0, std::pow(a, -std::max(sigma, 0.0)),
                          std::pow(n + a, std::max(0.0, -sigma))});
            double round_off = 4e-16 * (n + 8.0) * max_term;
            return {sum, bound + round_off};
        }
        n *= 2;
    }
}

/// Riemann zeta. Deep in the left half-plane the direct Euler-Maclaurin
/// sum cancels catastrophically, so the value is reflected through
/// zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s) instead;
/// relative accuracy then carries over from the right half-plane.
inline AnalyticValue riemann_zeta(cplx s) {
    if (s.real() >= -0.5) return hurwitz_zeta(s, 1.0);
    AnalyticValue right = hurwitz_zeta(1.0 - s, 1.0);
    cplx chain = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(M_PI)) *
                 detail::sin_pi(s / 2.0) * detail::gamma_lanczos_right(1.0 - s);
    cplx v = chain * right.value;
    double rel = right.abs_error / std::abs(right.value) + 5e-14;
    return {v, rel * std::abs(v) + 1e-300};
}

/// Dirichlet L(s, chi_-4) = 4^{-s} (zeta(s,1/4) - zeta(s,3/4)).
inline AnalyticValue dirichlet_l_chi4(cplx s) {
    AnalyticValue a = hurwitz_zeta(s, 0.25);
    AnalyticValue b = hurwitz_zeta(s, 0.75);
    cplx scale = std::exp(-s * std::log(4.0));
    return av_scale(av_sub(a, b), scale);
}

/// Dedekind zeta of the base field: Riemann zeta for Q, and
/// zeta(s) L(s, chi_-4) for Q(i).
inline AnalyticValue zeta_field(const FieldDescriptor& f, cplx s) {
    if (f.label == "Q") return riemann_zeta(s);
    if (f.label == "Q(i)") return av_mul(riemann_zeta(s), dirichlet_l_chi4(s));
    throw unsupported_field_error(f.label);
}

/// Completed factor xi(s); for Q this is half the classical completed zeta.
inline AnalyticValue xi(const FieldDescriptor& f, cplx s) {
    AnalyticValue z = zeta_field(f, s);
    AnalyticValue out = z;
    if (f.r1 > 0) {
        if (detail::is_nonpositive_integer(s / 2.0))
            throw pole_error("Gamma(s/2) factor");
        AnalyticValue g = gamma(s / 2.0);
        cplx fac = std::exp(-s / 2.0 * std::log(M_PI));
        AnalyticValue real_factor = av_scale(g, fac);
        for (int i = 0; i < f.r1; ++i) out = av_mul(out, real_factor);
        out = av_scale(out, std::pow(cplx(2.0, 0.0), -f.r1));
    }
    if (f.r2 > 0) {
        if (detail::is_nonpositive_integer(s))
            throw pole_error("Gamma(s) factor");
        AnalyticValue g = gamma(s);
        cplx fac = std::exp(-s * std::log(2.0 * M_PI));
        AnalyticValue cplx_factor = av_scale(g, fac);
        for (int i = 0; i < f.r2; ++i) out = av_mul(out, cplx_factor);
    }
    return out;
}

/// The real-place factor of the xi integral over Q:
/// int_R exp(-x s) exp(-pi exp(-2x)) dx, by adaptive quadrature with
/// certified tail truncation. Requires Re s > 0.
inline AnalyticValue effectivity_integral(cplx s, double tol = 1e-9) {
    const double sigma = s.real();
    if (!(sigma > 0.0))
        throw divergent_integral_error("effectivity integral needs Re s > 0");

    // Right tail: |f| <= exp(-sigma x).
    double x_hi = std::max(1.0, std::log(4.0 / (sigma * tol)) / sigma + 1.0);

    // Left tail: log|f(x)| = -sigma x - pi exp(-2x); once the log-slope
    // 2 pi exp(-2x) - sigma exceeds 1, the tail is below f(x_lo).
    double x_lo = -0.5;
    double tail_left;
    for (;;) {
        double slope = 2.0 * M_PI * std::exp(-2.0 * x_lo) - std::fabs(sigma);
        double logf = -sigma * x_lo - M_PI * std::exp(-2.0 * x_lo);
        if (slope >= 1.0 && logf <= std::log(tol / 4.0)) {
            tail_left = std::exp(logf) / slope;
            break;
        }
        x_lo -= 0.5;
    }
    double tail_right = std::exp(-sigma * x_hi) / sigma;

    auto f = [&](double x) {
        return std::exp(-s * x - M_PI * std::exp(-2.0 * x));
    };
    AnalyticValue q = integrate_adaptive(f, x_lo, x_hi, tol / 4.0, 5);
    return {q.value, q.abs_error + tail_left + tail_right};
}

}  // namespace hz

#endif  // HEIGHTZETA_SPECFUN_HPP
