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

// Hirzebruch surfaces over Q: exact censuses, pole predictions and the
// minimal-section regime analysis.
//
// Points live over a base point Q of P^1 with exact squared height h;
// the fiber through Q is the projective line of the bundle with Gram
// diag(1, h^{-e}), so a surface point is a canonical primitive base pair
// plus a canonical primitive fiber pair, with
//   H_{a,b}(P)^2 = (lambda^2 + mu^2 h^{-e})^a h^b     (exact rational).
// The base representative is fixed before the fiber lattice is built, so
// each rational point is enumerated exactly once.

#ifndef HEIGHTZETA_HIRZ_HPP
#define HEIGHTZETA_HIRZ_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <vector>

#include "heightzeta/analytic.hpp"
#include "heightzeta/arakelov.hpp"
#include "heightzeta/errors.hpp"
#include "heightzeta/pcount.hpp"
#include "heightzeta/rational.hpp"
#include "heightzeta/specfun.hpp"
#include "heightzeta/zclass.hpp"

namespace hz {

/// Surface F_e with polarization O(a, b); ample iff a > 0 and b > ae.
struct HirzebruchConfig {
    int e;
    int a;
    int b;
    RatMat base_gram;  // Gram of the rank-2 bundle defining the base P^1
};

inline HirzebruchConfig make_hirzebruch(int e, int a, int b,
                                        const RatMat& base_gram) {
    if (e < 2) throw domain_error("Hirzebruch degree e must be >= 2");
    if (!(a > 0 && b > a * e))
        throw domain_error("O(a,b) is ample only for a > 0, b > ae");
    if (base_gram.size() != 2)
        throw domain_error("base Gram must be 2x2");
    ArakelovBundle::make(base_gram);  // validates metric
    return HirzebruchConfig{e, a, b, base_gram};
}

inline HirzebruchConfig make_hirzebruch(int e, int a, int b) {
    return make_hirzebruch(e, a, b, RatMat::identity(2));
}

struct SurfacePoint {
    std::array<i64, 2> base;   // primitive (u, v), canonical sign
    std::array<i64, 2> fiber;  // primitive (lambda, mu), canonical sign
    Rat base_height_sq;        // H(Q)^2
    Rat total_height_sq;       // H_{a,b}(P)^2, exact
};

namespace detail {

inline bool pair_primitive(i64 a, i64 b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b) == 1;
}

}  // namespace detail

/// Exact squared height (lambda^2 + mu^2 h^{-e})^a h^b.
inline Rat surface_height_sq(const HirzebruchConfig& cfg,
                             const std::array<i64, 2>& base,
                             const std::array<i64, 2>& fiber) {
    if ((base[0] == 0 && base[1] == 0) || !detail::pair_primitive(base[0], base[1]))
        throw not_primitive_error("base pair");
    if ((fiber[0] == 0 && fiber[1] == 0) ||
        !detail::pair_primitive(fiber[0], fiber[1]))
        throw not_primitive_error("fiber pair");
    Rat h = cfg.base_gram.quadratic_form({base[0], base[1]});
    Rat fib = Rat(fiber[0]) * Rat(fiber[0]) +
              Rat(fiber[1]) * Rat(fiber[1]) * h.pow(-cfg.e);
    return fib.pow(cfg.a) * h.pow(cfg.b);
}

/// Stream all points with H_{a,b} <= B (closed inequality, bound passed
/// as B; exact rational comparisons throughout).
///
/// Overflow discipline: for h >= 1 the admissibility test is h^k <= B^2
/// (k = b - ae), which keeps every materialized power at most ~B^2 times
/// a small denominator power; fibers with lambda != 0 exist only when
/// h^b <= B^2, so h^b is computed only behind that log-scale gate.
inline void enumerate_surface_stream(
    const HirzebruchConfig& cfg, const Rat& height_bound,
    const std::function<void(const SurfacePoint&)>& emit) {
    if (height_bound < Rat(1)) throw domain_error("surface bound must be >= 1");
    const Rat bsq = height_bound * height_bound;
    const int k = cfg.b - cfg.a * cfg.e;  // positive by ampleness
    const double log_bsq = std::log(bsq.to_double());
    ArakelovBundle base_bundle = ArakelovBundle::make(cfg.base_gram);

    // every admissible base satisfies min(h^k, h^b) <= B^2; for h >= 1
    // the minimum is h^k, below 1 it is h^b
    double radius = std::pow(bsq.to_double(), 1.0 / k) * (1.0 + 1e-6) + 1e-6;
    enumerate_primitive_if(
        base_bundle, radius,
        [&](const std::vector<i64>&, const Rat& h) {
            return h >= Rat(1) ? h.pow(k) <= bsq : h.pow(cfg.b) <= bsq;
        },
        [&](HeightRecord&& rec) {
            const Rat& h = rec.height_sq;
            const Rat h_pow_me = h.pow(-cfg.e);
            const double log_h = std::log(h.to_double());

            // the minimal fiber point (0, 1) has H^2 = h^{b-ae} exactly
            Rat minimal = h.pow(k);
            if (minimal <= bsq)
                emit(SurfacePoint{{rec.coords[0], rec.coords[1]},
                                  {0, 1},
                                  h,
                                  minimal});

            // fibers with lambda != 0 need (lambda^2 + ...)^a h^b <= B^2,
            // so in particular h^b <= B^2; gate on logs with slack before
            // touching h^b exactly
            double log_budget = (log_bsq - cfg.b * log_h) / cfg.a;
            if (log_budget < -1e-9) return;
            const Rat h_pow_b = h.pow(cfg.b);
            double budget = std::exp(log_budget) * (1.0 + 1e-6) + 1e-6;
            i64 lam_max = static_cast<i64>(std::floor(std::sqrt(budget))) + 1;
            double mu_budget = budget / h_pow_me.to_double();
            i64 mu_max = static_cast<i64>(std::floor(std::sqrt(mu_budget))) + 1;

            for (i64 lam = 1; lam <= lam_max; ++lam)
                for (i64 mu = -mu_max; mu <= mu_max; ++mu) {
                    if (!detail::pair_primitive(lam, mu)) continue;
                    Rat fib = Rat(lam) * Rat(lam) + Rat(mu) * Rat(mu) * h_pow_me;
                    Rat total = fib.pow(cfg.a) * h_pow_b;
                    if (total <= bsq)
                        emit(SurfacePoint{{rec.coords[0], rec.coords[1]},
                                          {lam, mu},
                                          h,
                                          total});
                }
        });
}

inline i64 count_surface_points(const HirzebruchConfig& cfg,
                                const Rat& height_bound) {
    i64 n = 0;
    enumerate_surface_stream(cfg, height_bound, [&](const SurfacePoint&) { ++n; });
    return n;
}

inline std::vector<SurfacePoint> enumerate_surface(const HirzebruchConfig& cfg,
                                                   const Rat& height_bound) {
    std::vector<SurfacePoint> out;
    enumerate_surface_stream(cfg, height_bound,
                             [&](const SurfacePoint& p) { out.push_back(p); });
    return out;
}

/// Points on the minimal section (lambda = 0): the base census at
/// H(Q)^{b-ae} <= B, compared exactly.
inline i64 minimal_section_count(const HirzebruchConfig& cfg,
                                 const Rat& height_bound) {
    const Rat bsq = height_bound * height_bound;
    const int k = cfg.b - cfg.a * cfg.e;
    ArakelovBundle base_bundle = ArakelovBundle::make(cfg.base_gram);
    double radius = std::pow(bsq.to_double(), 1.0 / k) * (1.0 + 1e-6) + 1e-6;
    i64 n = 0;
    enumerate_primitive_if(
        base_bundle, radius,
        [&](const std::vector<i64>&, const Rat& h) { return h.pow(k) <= bsq; },
        [&](HeightRecord&&) { ++n; });
    return n;
}

/// Pole data of Z(F_e, s) in the domain Re s > max(1/a, (e+2)/b).
struct HirzPoleReport {
    Rat s1;                 // 2/a, always in the domain
    AnalyticValue rho1;     // Z(P^1, 2b/a - e) / (2a xi(2))
    Rat s2;                 // 2/(b - ae)
    AnalyticValue rho2;     // N(V) / ((b - ae) 2 xi(2))
    Rat sigma0;             // max(1/a, (e+2)/b)
    bool s2_in_domain;
    bool coincident;        // b = (e+1) a: the two poles collide
    int dominant;           // 0 -> s1, 1 -> s2
};

/// Z(P^1_gram, s) for real s > 2: tail-bounded summation whenever the
/// certificate sigma C B^{2-s} / (s-2) <= tol is reachable at a desk-scale
/// bound, through the continuation otherwise (the 1/B^{s-2} tail is
/// hopeless just above the abscissa).
inline AnalyticValue zeta_p1_value(const ArakelovBundle& base, double s,
                                   double tol = 1e-6) {
    if (s > 2.5) {
        double c = counting_constant(base);
        double b = std::pow(s * c / ((s - 2.0) * tol), 1.0 / (s - 2.0));
        b = std::max(b, 4.0);
        if (b <= 1200.0) {
            i64 bsq_int = static_cast<i64>(std::ceil(b * b)) + 1;
            return dirichlet_partial(base, cplx(s, 0.0), Rat(bsq_int));
        }
    }
    return continued_zeta(base, cplx(s, 0.0), tol).value;
}

inline HirzPoleReport predicted_poles(const HirzebruchConfig& cfg) {
    FieldDescriptor q = field_descriptor("Q");
    ArakelovBundle base = ArakelovBundle::make(cfg.base_gram);
    const int k = cfg.b - cfg.a * cfg.e;
    HirzPoleReport rep;
    rep.s1 = Rat(2, cfg.a);
    rep.s2 = Rat(2, k);
    rep.sigma0 = std::max(Rat(1, cfg.a), Rat(cfg.e + 2, cfg.b));
    rep.coincident = (cfg.b == (cfg.e + 1) * cfg.a);
    rep.s2_in_domain = rep.s2 > rep.sigma0;

    AnalyticValue xi2 = xi(q, cplx(2.0, 0.0));
    double zarg = 2.0 * cfg.b / cfg.a - cfg.e;
    AnalyticValue zp1 = zeta_p1_value(base, zarg);
    rep.rho1 = av_div(zp1, av_scale(xi2, 2.0 * cfg.a));
    rep.rho2 = {cplx(base.norm() / (k * 2.0 * xi2.real()), 0.0),
                base.norm() * xi2.abs_error / (k * 2.0 * xi2.real() * xi2.real())};

    rep.dominant = (rep.s2_in_domain && rep.s2 > rep.s1) ? 1 : 0;
    return rep;
}

struct CountComparison {
    i64 observed;
    double predicted;
    double ratio;
    double pole_location;
    double pole_residue;
};

/// Census against the Tauberian prediction from the dominant pole.
inline CountComparison compare_counts(const HirzebruchConfig& cfg,
                                      const Rat& height_bound) {
    HirzPoleReport rep = predicted_poles(cfg);
    if (rep.coincident)
        throw domain_error(
            "b = (e+1) a: the two poles coincide and no simple-pole "
            "prediction applies");
    double s_star =
        rep.dominant == 0 ? rep.s1.to_double() : rep.s2.to_double();
    double rho_star = rep.dominant == 0 ? rep.rho1.real() : rep.rho2.real();
    i64 observed = count_surface_points(cfg, height_bound);
    double predicted =
        tauberian_predict(s_star, 1, rho_star, height_bound.to_double());
    return {observed, predicted, static_cast<double>(observed) / predicted,
            s_star, rho_star};
}

/// alpha(O(a,b)) = inf{A : A O(a,b) + K in effective cone}; over F_e with
/// K = O(-2, -2-e) and the cone {a >= 0, b >= ae} this is
/// max(2/a, (2-e)/(b-ae)), hence 2/a whenever e >= 2.
inline Rat alpha_invariant(const HirzebruchConfig& cfg) {
    return std::max(Rat(2, cfg.a), Rat(2 - cfg.e, cfg.b - cfg.a * cfg.e));
}

/// CSV dump of surface points.
inline void write_surface_csv(std::ostream& os,
                              const std::vector<SurfacePoint>& pts) {
    os << "u,v,lambda,mu,base_h2_num,base_h2_den,h2_num,h2_den\n";
    for (const auto& p : pts) {
        os << p.base[0] << "," << p.base[1] << "," << p.fiber[0] << ","
           << p.fiber[1] << "," << p.base_height_sq.num() << ","
           << p.base_height_sq.den() << "," << p.total_height_sq.num() << ","
           << p.total_height_sq.den() << "\n";
    }
}

}  // namespace hz

#endif  // HEIGHTZETA_HIRZ_HPP
