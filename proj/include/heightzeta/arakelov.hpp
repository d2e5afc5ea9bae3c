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

// Arakelov vector bundles over Q as metrized lattices, with theta-weighted
// section counts and the Riemann-Roch / vanishing machinery.
//
// A bundle carries an exact rational Gram matrix plus one real twist
// parameter; the effective inner product is exp(-2 twist) * gram. Exact
// height work (pcount, hirz) requires twist = 0; theta sums use doubles.
//
// Tail certificates use
//   sum_{q(x) > R^2} e^{-pi q(x)} <= e^{-pi R^2 / 2} (1 + sqrt(2/lam))^r
// with lam a lower bound on the smallest Gram eigenvalue, obtained from
// splitting off half the exponent and bounding the remaining theta by the
// one-dimensional integral comparison.

#ifndef HEIGHTZETA_ARAKELOV_HPP
#define HEIGHTZETA_ARAKELOV_HPP

#include <cmath>
#include <string>
#include <vector>

#include "heightzeta/analytic.hpp"
#include "heightzeta/errors.hpp"
#include "heightzeta/lattice.hpp"
#include "heightzeta/linalg.hpp"
#include "heightzeta/numfield.hpp"
#include "heightzeta/rational.hpp"

namespace hz {

class ArakelovBundle {
 public:
    /// Validates symmetry and positive-definiteness (exact leading minors).
    static ArakelovBundle make(const RatMat& gram) {
        if (gram.size() < 1) throw invalid_metric_error("empty Gram matrix");
        if (!gram.symmetric()) throw invalid_metric_error("Gram not symmetric");
        for (int k = 1; k <= gram.size(); ++k)
            if (!(gram.leading_minor(k) > Rat(0)))
                throw invalid_metric_error("Gram not positive definite");
        return ArakelovBundle(gram, 0.0);
    }

    static ArakelovBundle identity(int rank) {
        return ArakelovBundle(RatMat::identity(rank), 0.0);
    }

    /// Rank-1 bundle of prescribed degree d, Gram [exp(-2d)].
    static ArakelovBundle line(double degree) {
        return ArakelovBundle(RatMat::identity(1), degree);
    }

    int rank() const { return gram_.size(); }
    const RatMat& gram() const { return gram_; }
    double twist() const { return twist_; }
    bool exact() const { return twist_ == 0.0; }

    /// deg V = -1/2 log det(effective Gram) = r * twist - 1/2 log det(gram).
    double degree() const {
        return rank() * twist_ - 0.5 * std::log(gram_.det().to_double());
    }
    double norm() const { return std::exp(degree()); }

    ArakelovBundle dual() const { return ArakelovBundle(gram_.inverse(), -twist_); }

    ArakelovBundle twisted(double t) const {
        return ArakelovBundle(gram_, twist_ + t);
    }

    ArakelovBundle direct_sum(const ArakelovBundle& o) const {
        if (twist_ != o.twist_)
            throw invalid_metric_error(
                "direct sum of bundles with different twists is not exact");
        return ArakelovBundle(RatMat::block_diag(gram_, o.gram_), twist_);
    }

    /// Determinant line bundle: rank 1, Gram [det], twist r * t.
    ArakelovBundle determinant() const {
        RatMat d(1);
        d(0, 0) = gram_.det();
        return ArakelovBundle(d, rank() * twist_);
    }

    /// Effective Gram as doubles, scale folded in.
    std::vector<double> effective_gram() const {
        std::vector<double> g = gram_.to_double();
        double u = std::exp(-2.0 * twist_);
        for (double& v : g) v *= u;
        return g;
    }

    /// Lower bound on the smallest eigenvalue of the effective Gram.
    double lambda_min() const {
        return lambda_min_lower_bound(gram_) * std::exp(-2.0 * twist_);
    }

 private:
    ArakelovBundle(RatMat g, double t) : gram_(std::move(g)), twist_(t) {}

    RatMat gram_;
    double twist_;
};

enum class BundleOp { dual, direct_sum, determinant };

inline ArakelovBundle bundle_algebra(const ArakelovBundle& v,
                                     const ArakelovBundle& w, BundleOp op) {
    switch (op) {
        case BundleOp::dual:
            return v.dual();
        case BundleOp::direct_sum:
            return v.direct_sum(w);
        case BundleOp::determinant:
            return v.determinant();
    }
    throw domain_error("unknown bundle operation");
}

/// Twist arm of the bundle algebra: tensor by a line bundle of degree t.
inline ArakelovBundle bundle_algebra(const ArakelovBundle& v, double t) {
    return v.twisted(t);
}

namespace detail {

struct ThetaSum {
    double phi;        // sum over nonzero lattice vectors
    double abs_error;  // tail certificate + roundoff allowance
};

// phi = sum_{x != 0} exp(-pi u q(x)) with the tail beyond the truncation
// ellipsoid certified below tol. chol factors the unscaled form q;
// lambda_lb bounds its smallest eigenvalue from below. Kahan-compensated.
inline ThetaSum theta_phi(const Cholesky& chol, double lambda_lb, double tol,
                          double u = 1.0) {
    const int r = chol.n;
    const double lam = lambda_lb * u;
    double log_theta1 = std::log1p(std::sqrt(2.0 / lam));
    double radius_eff =
        (2.0 / M_PI) * (std::log(1.0 / tol) + r * log_theta1 + 1.0);
    radius_eff = std::max(radius_eff, 2.0 / lam);

    double sum = 0.0, comp = 0.0;
    std::uint64_t terms = 0;
    enumerate_ellipsoid(chol, radius_eff / u,
                        [&](const std::vector<i64>&, double q) {
                            double term = std::exp(-M_PI * u * q);
                            double y = term - comp;
                            double t = sum + y;
                            comp = (t - sum) - y;
                            sum = t;
                            ++terms;
                        });
    double tail = std::exp(-0.5 * M_PI * radius_eff + r * log_theta1);
    // per-term relative error ~ pi * (fp error of u q) from the layered
    // recursion, plus compensated-summation roundoff
    double round_off =
        (2e-16 + M_PI * radius_eff * r * 1.5e-16) * std::max(sum, 1e-300) +
        1e-300 * static_cast<double>(terms);
    return {sum, tail + round_off};
}

// One-dimensional theta(u) - 1 for the unit lattice, with the modular
// transformation theta(u) = u^{-1/2} theta(1/u) applied when u < 1 so the
// series always converges in a handful of terms.
inline double theta1_minus1(double u) {
    if (u < 1.0)
        return (1.0 + theta1_minus1(1.0 / u)) / std::sqrt(u) - 1.0;
    double s = 0.0;
    for (int n = 1;; ++n) {
        double term = 2.0 * std::exp(-M_PI * u * n * n);
        s += term;
        if (term < 1e-300 || term < 1e-18 * s) break;
    }
    return s;
}

}  // namespace detail

/// Reusable theta-sum evaluator: factors the rational Gram once and
/// evaluates phi(twisted(V, t)) for many t.
class ThetaEvaluator {
 public:
    explicit ThetaEvaluator(const ArakelovBundle& v)
        : chol_(Cholesky::build(v.gram().to_double(), v.rank())),
          lambda_base_(lambda_min_lower_bound(v.gram())),
          twist_(v.twist()) {}

    /// phi of the bundle twisted by an additional t, abs error <= tol
    /// plus roundoff.
    double phi(double t, double tol) const {
        double u = std::exp(-2.0 * (twist_ + t));
        return detail::theta_phi(chol_, lambda_base_, tol, u).phi;
    }

 private:
    Cholesky chol_;
    double lambda_base_;
    double twist_;
};

/// phi(V) = #H^0(V) - 1, the theta-weighted count of nonzero sections,
/// with abs_error <= tol (plus roundoff allowance).
inline AnalyticValue phi(const ArakelovBundle& v, double tol) {
    if (!(tol > 0.0)) throw domain_error("phi: tol must be positive");
    Cholesky chol = Cholesky::build(v.effective_gram(), v.rank());
    auto ts = detail::theta_phi(chol, v.lambda_min(), tol);
    return {cplx(ts.phi, 0.0), ts.abs_error};
}

/// h^0(V) = log #H^0(V) = log1p(phi). The declared abs_error bounds the
/// error on #H^0 before the log, per the operation contract.
inline AnalyticValue h0(const ArakelovBundle& v, double tol) {
    if (!(tol > 0.0)) throw domain_error("h0: tol must be positive");
    Cholesky chol = Cholesky::build(v.effective_gram(), v.rank());
    auto ts = detail::theta_phi(chol, v.lambda_min(), tol);
    return {cplx(std::log1p(ts.phi), 0.0), ts.abs_error};
}

/// Natural log of a certified upper bound for phi(twisted(V, t)).
/// Uses the one-dimensional comparisons
///   theta1(u) - 1 <= min( 2 e^{-pi u} / (1 - e^{-3 pi u}), u^{-1/2} )
/// applied with u = exp(-2t) lambda_min, so the bound decays doubly
/// exponentially as t -> -infinity and grows like e^{rt} as t -> +infinity.
inline double phi_upper_bound_log(const ArakelovBundle& v, double t) {
    const int r = v.rank();
    double u = v.lambda_min() * std::exp(-2.0 * t);
    // log of the 1-D bound
    double log_gauss = std::log(2.0) - M_PI * u -
                       std::log1p(-std::exp(-3.0 * M_PI * std::min(u, 700.0)));
    double log_flat = -0.5 * std::log(u);
    double log_s = std::min(log_gauss, log_flat);
    // (1 + S)^r - 1 <= r S (1 + S)^{r-1}
    double log1p_s = (log_s > 0.0) ? (log_s + std::log1p(std::exp(-log_s)))
                                   : std::log1p(std::exp(log_s));
    return std::log(static_cast<double>(r)) + log_s + (r - 1) * log1p_s;
}

/// exp of the log bound, clamped to stay finite.
inline double phi_upper_bound(const ArakelovBundle& v, double t) {
    double lg = phi_upper_bound_log(v, t);
    if (lg > 700.0) return INFINITY;
    return (lg < -745.0) ? 0.0 : std::exp(lg);
}

/// Riemann-Roch defect h^0(V) - h^0(V^dual) - deg V (over Q the canonical
/// bundle is trivial). Poisson summation forces this to vanish; the
/// returned number is the numerical residue and should sit at roundoff
/// scale (|defect| <= 1e-9 for well-conditioned Gram).
inline double rr_defect(const ArakelovBundle& v) {
    double d = v.degree();
    double tol_v = 1e-13 * std::max(1.0, std::exp(d));
    double tol_w = 1e-13 * std::max(1.0, std::exp(-d));
    AnalyticValue a = h0(v, tol_v);
    AnalyticValue b = h0(v.dual(), tol_w);
    return a.real() - b.real() - d;
}

}  // namespace hz

#endif  // HEIGHTZETA_ARAKELOV_HPP
