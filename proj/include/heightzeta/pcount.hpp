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

// Exact enumeration of rational points of bounded height on P(V)(Q).
// Candidates come from the floating-point ellipsoid traversal (bounds
// widened so nothing is missed); membership is settled by an exact
// integer comparison, so boundary points H = B are classified
// deterministically. One canonical representative per projective point:
// gcd 1, first nonzero coordinate positive.

#ifndef HEIGHTZETA_PCOUNT_HPP
#define HEIGHTZETA_PCOUNT_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <vector>

#include "heightzeta/analytic.hpp"
#include "heightzeta/arakelov.hpp"
#include "heightzeta/errors.hpp"
#include "heightzeta/lattice.hpp"

namespace hz {

/// Enumerated rational point with exact squared height.
struct HeightRecord {
    std::vector<i64> coords;  // primitive, first nonzero entry positive
    Rat height_sq;            // x^T G x, exact
};

namespace detail {

inline bool is_primitive(const std::vector<i64>& x) {
    i64 g = 0;
    for (i64 v : x) g = std::gcd(g, v < 0 ? -v : v);
    return g == 1;
}

inline bool canonical_sign(const std::vector<i64>& x) {
    for (i64 v : x) {
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return false;  // zero vector
}

/// Gram matrix cleared to integers: M = D * G with D the lcm of the
/// entry denominators. q(x) = (x^T M x) / D exactly.
struct IntGram {
    int n = 0;
    i64 scale = 1;
    std::vector<i64> m;

    static IntGram build(const RatMat& g) {
        IntGram ig;
        ig.n = g.size();
        i128 d = 1;
        for (int i = 0; i < ig.n; ++i)
            for (int j = 0; j < ig.n; ++j) {
                i64 den = g(i, j).den();
                d = d / hz::detail::gcd128(d, den) * den;
                if (d > i128(INT64_MAX))
                    throw overflow_error("Gram denominator lcm");
            }
        ig.scale = static_cast<i64>(d);
        ig.m.resize(static_cast<size_t>(ig.n) * ig.n);
        for (int i = 0; i < ig.n; ++i)
            for (int j = 0; j < ig.n; ++j) {
                i128 v = i128(g(i, j).num()) * (ig.scale / g(i, j).den());
                ig.m[static_cast<size_t>(i) * ig.n + j] =
                    hz::detail::narrow(v, "scaled Gram entry");
            }
        return ig;
    }

    i128 form(const std::vector<i64>& x) const {
        i128 s = 0;
        for (int i = 0; i < n; ++i) {
            i128 row = 0;
            for (int j = 0; j < n; ++j)
                row += i128(m[static_cast<size_t>(i) * n + j]) * x[j];
            s += row * x[i];
        }
        return s;
    }
};

}  // namespace detail

/// Exact squared height x^T G x of a primitive vector.
inline Rat point_height(const ArakelovBundle& v, const std::vector<i64>& x) {
    if (!v.exact())
        throw domain_error("heights need an untwisted rational Gram");
    if (static_cast<int>(x.size()) != v.rank())
        throw domain_error("coordinate length does not match rank");
    bool nonzero = false;
    for (i64 c : x) nonzero |= (c != 0);
    if (!nonzero) throw not_primitive_error("zero vector");
    if (!detail::is_primitive(x)) throw not_primitive_error("gcd exceeds 1");
    return v.gram().quadratic_form(x);
}

/// Stream every projective point with an exact acceptance predicate on
/// (coords, squared height). search_radius_sq is the float search bound
/// in q-units and must dominate everything the predicate can accept.
inline void enumerate_primitive_if(
    const ArakelovBundle& v, double search_radius_sq,
    const std::function<bool(const std::vector<i64>&, const Rat&)>& accept,
    const std::function<void(HeightRecord&&)>& emit) {
    if (!v.exact())
        throw domain_error("enumeration needs an untwisted rational Gram");
    auto ig = detail::IntGram::build(v.gram());
    Cholesky chol = Cholesky::build(v.gram().to_double(), v.rank());
    enumerate_ellipsoid(
        chol, search_radius_sq,
        [&](const std::vector<i64>& x, double) {
            if (!detail::canonical_sign(x)) return;
            if (!detail::is_primitive(x)) return;
            Rat hsq = Rat::from128(ig.form(x), ig.scale);
            if (!accept(x, hsq)) return;
            emit(HeightRecord{x, hsq});
        });
}

/// All points with H(P) <= B given bound_sq = B^2 (closed inequality),
/// in deterministic traversal order.
inline void enumerate_points_stream(
    const ArakelovBundle& v, const Rat& bound_sq,
    const std::function<void(HeightRecord&&)>& emit) {
    if (!(bound_sq > Rat(0))) throw domain_error("bound must be positive");
    double radius = bound_sq.to_double() * (1.0 + 1e-9) + 1e-9;
    enumerate_primitive_if(
        v, radius,
        [&](const std::vector<i64>&, const Rat& hsq) { return hsq <= bound_sq; },
        emit);
}

inline std::vector<HeightRecord> enumerate_points(const ArakelovBundle& v,
                                                  const Rat& bound_sq) {
    std::vector<HeightRecord> out;
    enumerate_points_stream(v, bound_sq,
                            [&](HeightRecord&& r) { out.push_back(std::move(r)); });
    return out;
}

/// Streaming count, no storage.
inline i64 count_points(const ArakelovBundle& v, const Rat& bound_sq) {
    i64 n = 0;
    enumerate_points_stream(v, bound_sq, [&](HeightRecord&&) { ++n; });
    return n;
}

/// Explicit constant with n(u) <= C u^r for u >= 1, from the coordinate
/// box |x_i| <= u sqrt((G^{-1})_ii).
inline double counting_constant(const ArakelovBundle& v) {
    RatMat inv = v.gram().inverse();
    double c = 0.5;
    for (int i = 0; i < v.rank(); ++i)
        c *= 2.0 * std::sqrt(inv(i, i).to_double()) + 1.0;
    return c;
}

/// Partial Dirichlet sum sum_{H(P) <= B} H(P)^{-s} with a certified tail
/// bound when Re s > r; otherwise the partial sum is returned with an
/// infinite error bound (no-tail-bound state).
inline AnalyticValue dirichlet_partial(const ArakelovBundle& v, cplx s,
                                       const Rat& bound_sq) {
    if (bound_sq < Rat(1)) throw domain_error("dirichlet bound must be >= 1");
    const double sigma = s.real();
    cplx sum(0.0, 0.0);
    i64 n = 0;
    enumerate_points_stream(v, bound_sq, [&](HeightRecord&& rec) {
        double hsq = rec.height_sq.to_double();
        sum += std::exp(-0.5 * s * std::log(hsq));
        ++n;
    });
    double tail = INFINITY;
    const int r = v.rank();
    if (sigma > r) {
        double b = std::sqrt(bound_sq.to_double());
        tail = std::abs(s) * counting_constant(v) * std::pow(b, r - sigma) /
               (sigma - r);
    }
    double round_off = 4e-16 * static_cast<double>(n + 1);
    return {sum, tail + round_off};
}

/// CSV dump: coordinates then exact squared height as num/den.
inline void write_points_csv(std::ostream& os,
                             const std::vector<HeightRecord>& pts, int rank) {
    for (int i = 0; i < rank; ++i) os << "x" << i << ",";
    os << "height_sq_num,height_sq_den\n";
    for (const auto& p : pts) {
        for (i64 c : p.coords) os << c << ",";
        os << p.height_sq.num() << "," << p.height_sq.den() << "\n";
    }
}

}  // namespace hz

#endif  // HEIGHTZETA_PCOUNT_HPP
