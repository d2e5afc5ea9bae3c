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

// Analytic continuation of Z(P(V), s) over Q. With alpha = 1, w = 2,
// |Delta| = 1 the split of the Picard integral reads
//
//   2 xi(s) Z(P(V), s) = J(V, s) + N(V) J(V*, r - s)
//                        + N(V)/(s - r) - 1/s,
//
// where J(V, z) = int_{-inf}^0 exp(-z t) phi(V twisted by t) dt converges
// for every z (the integrand decays doubly exponentially). Residues, the
// functional equation, the k-th zeta integrals and the Tauberian
// prediction formula all hang off this identity.

#ifndef HEIGHTZETA_ZCLASS_HPP
#define HEIGHTZETA_ZCLASS_HPP

#include <cmath>
#include <complex>

#include "heightzeta/analytic.hpp"
#include "heightzeta/arakelov.hpp"
#include "heightzeta/errors.hpp"
#include "heightzeta/quadrature.hpp"
#include "heightzeta/specfun.hpp"

namespace hz {

namespace detail {

// Truncation point for int_{-inf}^{-T}: past it the log-integrand
// |exp(-zt)| phi_ub falls at rate >= 1 per unit t, so the discarded tail
// is below exp(log f(-T)). Returns T with tail <= tol.
inline double j_truncation(const ArakelovBundle& v, double abs_re_z,
                           double tol) {
    double t = 1.0;
    for (;;) {
        double u = v.lambda_min() * std::exp(2.0 * t);
        double slope = 2.0 * M_PI * u - abs_re_z;
        double logf = phi_upper_bound_log(v, -t) + abs_re_z * t;
        if (slope >= 1.0 && logf <= std::log(tol)) return t;
        t += 0.5;
        if (t > 80.0) return t;  // unreachable for sane metrics
    }
}

}  // namespace detail

/// J(V, z) = int_{-inf}^0 exp(-z t) phi(twisted(V, t)) dt with certified
/// truncation and adaptive quadrature; entire in z.
inline AnalyticValue j_integral(const ArakelovBundle& v, cplx z, double tol) {
    if (!(tol > 0.0)) throw domain_error("j_integral: tol must be positive");
    const double re = z.real();
    const double big_t = detail::j_truncation(v, std::fabs(re), tol / 4.0);

    ThetaEvaluator theta(v);
    const double tol_phi = tol / (8.0 * (big_t + 1.0));
    auto f = [&](double t) -> cplx {
        // theta tolerance shrinks where the exp(-zt) weight is large
        double eps = tol_phi * std::min(1.0, std::exp(re * t));
        double ph = theta.phi(t, std::max(eps, 1e-280));
        return std::exp(-z * t) * ph;
    };
    AnalyticValue q = integrate_adaptive(f, -big_t, 0.0, tol / 4.0, 5);
    double phi_budget = tol_phi * big_t;
    double err = q.abs_error + tol / 4.0 + phi_budget + 1e-15 * std::abs(q.value);
    return {q.value, err};
}

/// Continued Z and the four summands it was assembled from.
struct ContinuationResult {
    AnalyticValue value;      // Z(P(V), s)
    AnalyticValue j_self;     // J(V, s)
    AnalyticValue j_dual;     // N(V) J(V*, r - s)
    cplx pole_r;              // N(V) / (s - r)
    cplx pole_zero;           // -1/s
};

/// Meromorphic continuation of the height zeta function. Throws at the
/// poles s = 0, s = r and near zeros of xi (ill-conditioned quotient).
inline ContinuationResult continued_zeta(const ArakelovBundle& v, cplx s,
                                         double tol = 1e-9) {
    const int r = v.rank();
    if (std::abs(s) < 1e-9) throw pole_error("Z has a pole at s = 0");
    if (std::abs(s - cplx(r, 0.0)) < 1e-9)
        throw pole_error("Z has its main pole at s = r");

    FieldDescriptor q = field_descriptor("Q");
    AnalyticValue xs = xi(q, s);
    // xi = gamma factor * zeta; a small quotient flags a nearby zeta zero
    double gfac =
        0.5 * std::abs(std::exp(-s / 2.0 * std::log(M_PI))) * gamma(s / 2.0).mod();
    if (xs.mod() < 1e-4 * gfac || xs.mod() < 10.0 * xs.abs_error)
        throw ill_conditioned_error("evaluation point too close to a zero of xi");

    const double n_v = v.norm();
    double tol_j = std::max(tol * xs.mod() / 2.0, 1e-13);
    ContinuationResult out;
    out.j_self = j_integral(v, s, tol_j);
    AnalyticValue jd = j_integral(v.dual(), cplx(r, 0.0) - s, tol_j / n_v);
    out.j_dual = av_scale(jd, n_v);
    out.pole_r = n_v / (s - cplx(r, 0.0));
    out.pole_zero = -1.0 / s;

    AnalyticValue num = av_add(out.j_self, out.j_dual);
    num = av_add(num, av_exact(out.pole_r + out.pole_zero));
    out.value = av_div(num, av_scale(xs, 2.0));
    return out;
}

/// Residue of Z(P(V), s) at s = r: N(V) / (2 xi(r)) over Q.
inline double residue_main(const ArakelovBundle& v) {
    FieldDescriptor q = field_descriptor("Q");
    AnalyticValue xr = xi(q, cplx(v.rank(), 0.0));
    return v.norm() / (2.0 * xr.real());
}

namespace detail {

// N(V)^{-1/2} xi(s) Z(P(V), s), assembled at the numerator level of the
// star identity so that poles and zeros of xi itself do not interfere
// (xi Z is regular wherever the four summands are).
inline cplx star_side(const ArakelovBundle& v, cplx s, double tol) {
    const int r = v.rank();
    if (std::abs(s) < 1e-9 || std::abs(s - cplx(r, 0.0)) < 1e-9)
        throw pole_error("star identity pole");
    double n_v = v.norm();
    cplx num = j_integral(v, s, tol).value +
               n_v * j_integral(v.dual(), cplx(r, 0.0) - s, tol / n_v).value +
               n_v / (s - cplx(r, 0.0)) - 1.0 / s;
    return std::pow(n_v, -0.5) * num / 2.0;
}

}  // namespace detail

/// Defect of the completed functional equation,
/// |N^(-1/2) xi(s) Z(V,s) - N*^(-1/2) xi(r-s) Z(V*, r-s)|, each side
/// through its own dual-bundle continuation.
inline double funceq_defect(const ArakelovBundle& v, cplx s, double tol = 1e-9) {
    const int r = v.rank();
    cplx lhs = detail::star_side(v, s, tol);
    cplx rhs = detail::star_side(v.dual(), cplx(r, 0.0) - s, tol);
    return std::abs(lhs - rhs);
}

/// Wan's k-th zeta integral over Q:
/// xi^(k)(s) = 2^{-(k+1)} int_R phi1(t)^{k+1} exp(-st) dt, Re s > k+1,
/// with phi1(t) the theta count of the degree-t line bundle.
inline AnalyticValue wan_xi_k(int k, cplx s, double tol = 1e-9) {
    if (k < 0) throw domain_error("wan_xi_k: k must be nonnegative");
    const double sigma = s.real();
    if (!(sigma > k + 1))
        throw divergent_integral_error("xi^(k) needs Re s > k + 1");

    // right tail: phi1(t) <= e^t, so the integrand is <= e^{(k+1-sigma)t}
    double t_hi = std::log(8.0 / ((sigma - k - 1) * tol)) / (sigma - k - 1) + 1.0;
    // left tail: reuse the doubly-exponential certificate at power k+1
    ArakelovBundle unit = ArakelovBundle::identity(1);
    double t_lo = 1.0;
    for (;;) {
        double u = std::exp(2.0 * t_lo);
        double slope = (k + 1) * 2.0 * M_PI * u - sigma;
        double logf = (k + 1) * phi_upper_bound_log(unit, -t_lo) + sigma * t_lo;
        if (slope >= 1.0 && logf <= std::log(tol / 8.0)) break;
        t_lo += 0.5;
    }

    auto f = [&](double t) -> cplx {
        double ph = detail::theta1_minus1(std::exp(-2.0 * t));
        return std::exp(-s * t) * std::pow(ph, k + 1);
    };
    AnalyticValue quad = integrate_adaptive(f, -t_lo, t_hi, tol / 4.0, 6);
    double tail_hi =
        std::exp(-(sigma - k - 1) * t_hi) / (sigma - k - 1);
    double err = quad.abs_error + tol / 4.0 + tail_hi +
                 1e-13 * (std::abs(quad.value) + 1.0);
    double scale = std::pow(2.0, -(k + 1));
    return {quad.value * scale, err * scale};
}

/// | Z(P^n, s) - xi(s)^{-1} sum_k C(n+1, k+1) 2^k xi^(k)(s) |,
/// the two sides computed through independent pipelines.
inline double wan_formula_defect(int n, cplx s, double tol = 1e-8) {
    if (n < 0) throw domain_error("wan_formula_defect: n must be nonnegative");
    if (!(s.real() > n + 1))
        throw divergent_integral_error("Wan formula needs Re s > n + 1");
    FieldDescriptor q = field_descriptor("Q");
    cplx sum(0.0, 0.0);
    double binom = n + 1;  // C(n+1, 1)
    for (int k = 0; k <= n; ++k) {
        if (k > 0) binom = binom * (n + 1 - k) / (k + 1);  // C(n+1, k+1)
        sum += binom * std::pow(2.0, k) * wan_xi_k(k, s, tol).value;
    }
    cplx rhs = sum / xi(q, s).value;
    ContinuationResult z = continued_zeta(ArakelovBundle::identity(n + 1), s, tol);
    return std::abs(z.value.value - rhs);
}

/// Tauberian prediction g(a) / (a (b-1)!) * B^a (log B)^{b-1} for a pole
/// of order b at s = a.
inline double tauberian_predict(double a, int b, double g_a, double big_b) {
    if (!(a > 0.0)) throw domain_error("tauberian: a must be positive");
    if (b < 1) throw domain_error("tauberian: order must be >= 1");
    if (!(big_b > 1.0)) throw domain_error("tauberian: B must exceed 1");
    double fact = 1.0;
    for (int i = 2; i < b; ++i) fact *= i;
    return g_a / (a * fact) * std::pow(big_b, a) *
           std::pow(std::log(big_b), b - 1);
}

}  // namespace hz

#endif  // HEIGHTZETA_ZCLASS_HPP
