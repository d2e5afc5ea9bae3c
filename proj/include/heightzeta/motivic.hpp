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

// Exact symbolic engine for genus-0 motivic height zeta functions.
// Coefficients live in Z[L, L^-1]; a split bundle on the projective line
// is a multiset of twists, and every class in play ([P^n] including
// negative n, [X_n], [Sect_d]) is a Laurent polynomial in L.
//
// Series carry explicit determinacy windows: a coefficient outside the
// window is either known to vanish (exact_below / exact_above) or
// unavailable, and operations refuse under-determined requests instead of
// silently truncating. Substituting t -> L^{-r} t^{-1} swaps the two
// one-sided windows, which is what makes the functional-equation checks
// meaningful rather than vacuous.

#ifndef HEIGHTZETA_MOTIVIC_HPP
#define HEIGHTZETA_MOTIVIC_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "heightzeta/errors.hpp"
#include "heightzeta/rational.hpp"

namespace hz {

/// Laurent polynomial in the Lefschetz class L with integer coefficients.
class MotElt {
 public:
    MotElt() = default;
    static MotElt zero() { return MotElt(); }
    static MotElt one() { return term(1, 0); }
    static MotElt lefschetz(int e = 1) { return term(1, e); }
    static MotElt term(i64 coeff, int exp) {
        MotElt m;
        if (coeff != 0) m.c_[exp] = coeff;
        return m;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, i64>& coeffs() const { return c_; }

    i64 coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? 0 : it->second;
    }

    friend MotElt operator+(const MotElt& a, const MotElt& b) {
        MotElt r = a;
        for (const auto& [e, v] : b.c_) r.add_term(e, v);
        return r;
    }
    friend MotElt operator-(const MotElt& a, const MotElt& b) {
        MotElt r = a;
        for (const auto& [e, v] : b.c_) r.add_term(e, -v);
        return r;
    }
    MotElt operator-() const {
        MotElt r;
        for (const auto& [e, v] : c_) r.c_[e] = -v;
        return r;
    }
    friend MotElt operator*(const MotElt& a, const MotElt& b) {
        MotElt r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    MotElt& operator+=(const MotElt& o) { return *this = *this + o; }
    MotElt& operator-=(const MotElt& o) { return *this = *this - o; }
    MotElt& operator*=(const MotElt& o) { return *this = *this * o; }

    friend bool operator==(const MotElt& a, const MotElt& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const MotElt& a, const MotElt& b) {
        return !(a == b);
    }

    /// Multiply by L^k (exponent shift).
    MotElt shifted(int k) const {
        MotElt r;
        for (const auto& [e, v] : c_) r.c_[e + k] = v;
        return r;
    }

    /// Ring homomorphism L -> q; exact rational output.
    Rat specialize(i64 q) const {
        if (q < 2) throw domain_error("specialization needs q >= 2");
        Rat s(0);
        for (const auto& [e, v] : c_) s += Rat(v) * Rat(q).pow(e);
        return s;
    }

    /// Canonical rendering, exponents descending: "L^2 - 2*L + 3*L^-1".
    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            i64 v = it->second;
            int e = it->first;
            if (first) {
                if (v < 0) os << "-";
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            i64 av = v < 0 ? -v : v;
            if (av != 1 || e == 0) os << av;
            if (e != 0) {
                if (av != 1) os << "*";
                os << "L";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

 private:
    void add_term(int e, i64 v) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (v != 0) c_[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    std::map<int, i64> c_;
};

/// [P^n] for any integer n: geometric sum for n >= 0, zero at n = -1, and
/// the negative-dimensional extension -L^-1 - ... - L^-(r-1) for n = -r.
inline MotElt projective_class(int n) {
    MotElt m;
    if (n >= 0) {
        for (int i = 0; i <= n; ++i) m += MotElt::term(1, i);
    } else if (n <= -2) {
        for (int i = 1; i <= -n - 1; ++i) m -= MotElt::term(1, -i);
    }
    return m;
}

/// Splitting type a_1 >= ... >= a_r of a bundle on the projective line.
struct SplittingType {
    std::vector<int> a;

    explicit SplittingType(std::vector<int> twists) : a(std::move(twists)) {
        if (a.empty()) throw domain_error("splitting type needs rank >= 1");
        std::sort(a.begin(), a.end(), std::greater<int>());
    }

    int rank() const { return static_cast<int>(a.size()); }
    int degree() const { return std::accumulate(a.begin(), a.end(), 0); }
    int max_twist() const { return a.front(); }
    int min_twist() const { return a.back(); }

    SplittingType dual() const {
        std::vector<int> d;
        d.reserve(a.size());
        for (int x : a) d.push_back(-x);
        return SplittingType(std::move(d));
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < a.size(); ++i)
            s += (i ? "," : "") + std::to_string(a[i]);
        return s + ")";
    }
};

/// Truncated Laurent series in t over Z[L, L^-1] with an explicit
/// determinacy window [lo, hi]; exact_below / exact_above record known
/// vanishing outside the window.
class MotSeries {
 public:
    MotSeries(int lo, int hi, bool exact_below, bool exact_above)
        : lo_(lo), hi_(hi), below_(exact_below), above_(exact_above) {
        if (hi < lo) throw window_error("empty series window");
        c_.assign(static_cast<size_t>(hi - lo + 1), MotElt::zero());
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool exact_below() const { return below_; }
    bool exact_above() const { return above_; }

    void set(int k, MotElt v) { c_.at(static_cast<size_t>(k - lo_)) = std::move(v); }

    const MotElt& coeff(int k) const {
        static const MotElt kZero;
        if (k < lo_) {
            if (below_) return kZero;
            throw window_error("coefficient below the determined window");
        }
        if (k > hi_) {
            if (above_) return kZero;
            throw window_error("coefficient above the determined window");
        }
        return c_[static_cast<size_t>(k - lo_)];
    }

    /// Multiply by a finite Laurent polynomial in t (pairs exponent,
    /// element). The result window is exactly the set of exponents fully
    /// determined by this window.
    MotSeries mul_tpoly(const std::vector<std::pair<int, MotElt>>& p) const {
        if (p.empty()) throw domain_error("empty multiplier");
        int dlo = p.front().first, dhi = p.front().first;
        for (const auto& [d, unused] : p) {
            dlo = std::min(dlo, d);
            dhi = std::max(dhi, d);
        }
        int rlo, rhi;
        if (below_ && above_) {
            rlo = lo_ + dlo;
            rhi = hi_ + dhi;
        } else if (below_) {
            rlo = lo_ + dlo;
            rhi = hi_ + dlo;
        } else if (above_) {
            rlo = lo_ + dhi;
            rhi = hi_ + dhi;
        } else {
            rlo = lo_ + dhi;
            rhi = hi_ + dlo;
            if (rhi < rlo)
                throw window_error("product window is empty");
        }
        MotSeries out(rlo, rhi, below_, above_);
        for (int k = rlo; k <= rhi; ++k) {
            MotElt s;
            for (const auto& [d, elt] : p) s += elt * coeff(k - d);
            out.set(k, s);
        }
        return out;
    }

    /// Substitution t -> L^{-r} t^{-1}: exponent m picks up coefficient
    /// c_{-m} shifted by L^{r m}; the one-sided windows swap.
    MotSeries substitute_inv(int r) const {
        MotSeries out(-hi_, -lo_, above_, below_);
        for (int m = -hi_; m <= -lo_; ++m)
            out.set(m, coeff(-m).shifted(r * m));
        return out;
    }

    /// Shift exponents (multiply by t^k).
    MotSeries shifted_t(int k) const {
        MotSeries out(lo_ + k, hi_ + k, below_, above_);
        for (int m = lo_; m <= hi_; ++m) out.set(m + k, coeff(m));
        return out;
    }

    /// Coefficientwise multiplication by a fixed element.
    MotSeries scaled(const MotElt& e) const {
        MotSeries out = *this;
        for (auto& v : out.c_) v *= e;
        return out;
    }

    MotSeries cropped(int new_hi) const {
        if (new_hi > hi_ || new_hi < lo_)
            throw window_error("crop outside window");
        MotSeries out(lo_, new_hi, below_, false);
        for (int m = lo_; m <= new_hi; ++m) out.set(m, coeff(m));
        return out;
    }

    /// Evaluate a fully exact series (finite Laurent polynomial in t) at
    /// t = L^{-r}.
    MotElt eval_at_lefschetz_pow(int neg_r_exp) const {
        if (!below_ || !above_)
            throw window_error("evaluation needs a finite polynomial");
        MotElt s;
        for (int k = lo_; k <= hi_; ++k)
            s += coeff(k).shifted(neg_r_exp * k);
        return s;
    }

    std::vector<Rat> specialize(i64 q) const {
        std::vector<Rat> out;
        out.reserve(c_.size());
        for (const auto& e : c_) out.push_back(e.specialize(q));
        return out;
    }

 private:
    int lo_, hi_;
    bool below_, above_;
    std::vector<MotElt> c_;
};

/// (t-1)(t-L^{-r}) as a t-polynomial.
inline std::vector<std::pair<int, MotElt>> pole_pair_poly(int r) {
    return {{0, MotElt::term(1, -r)},
            {1, -(MotElt::one() + MotElt::term(1, -r))},
            {2, MotElt::one()}};
}

/// (1-t)(1-Lt) as a t-polynomial.
inline std::vector<std::pair<int, MotElt>> zeta_denominator_poly() {
    return {{0, MotElt::one()},
            {1, -(MotElt::one() + MotElt::lefschetz())},
            {2, MotElt::lefschetz()}};
}

/// Kapranov zeta of the projective line through degree N:
/// sum_n [P^n] t^n.
inline MotSeries zeta_p1_series(int n_max) {
    if (n_max < 0) throw domain_error("truncation must be nonnegative");
    MotSeries s(0, n_max, true, false);
    for (int n = 0; n <= n_max; ++n) s.set(n, projective_class(n));
    return s;
}

/// Fiberwise class of X_n(V): h = sum_i max(0, n + a_i + 1) independent
/// sections, so [X_n] = [P^{h-1}] (zero when h = 0).
inline MotElt x_n_class(const SplittingType& split, int n) {
    i64 h = 0;
    for (int ai : split.a) h += std::max(0, n + ai + 1);
    return projective_class(static_cast<int>(h) - 1);
}

/// zeta(t) Z(P(V), t) = sum_n [X_n] t^n; coefficients vanish below
/// -max(a_i) - 1.
inline MotSeries zetaZ_series(const SplittingType& split, int n_max) {
    if (n_max < 0) throw domain_error("truncation must be nonnegative");
    int n_min = -split.max_twist() - 1;
    if (n_max < n_min) throw window_error("truncation below first index");
    MotSeries s(n_min, n_max, true, false);
    for (int n = n_min; n <= n_max; ++n) s.set(n, x_n_class(split, n));
    return s;
}

/// [Sect_d] series: zetaZ divided by zeta, i.e. multiplied by
/// (1-t)(1-Lt); contract window is [n_min, N-2].
inline MotSeries sect_series(const SplittingType& split, int n_max) {
    if (n_max < 2) throw domain_error("sect_series needs N >= 2");
    MotSeries s = zetaZ_series(split, n_max).mul_tpoly(zeta_denominator_poly());
    return s.cropped(n_max - 2);
}

struct RationalityReport {
    MotSeries poly;  // (t-1)(t-L^{-r}) zetaZ as a finite Laurent polynomial
    bool all_zero;   // every residual coefficient vanished
    std::vector<std::pair<int, MotElt>> residuals;  // offending terms
};

/// Stabilization index: from n1 = -min(a_i) on, every twist contributes.
inline int stabilization_index(const SplittingType& split) {
    return -split.min_twist();
}

/// Multiplies zetaZ by (t-1)(t-L^{-r}) and certifies that all
/// coefficients above degree n1+1 (up to the window edge) vanish; what
/// remains is the finite polynomial of the rational form.
inline RationalityReport rationality_witness(const SplittingType& split,
                                             int n_max) {
    const int n1 = stabilization_index(split);
    if (n_max < n1 + 4)
        throw insufficient_truncation_error(
            "need N >= " + std::to_string(n1 + 4) + " for split " + split.str());
    const int r = split.rank();
    MotSeries prod = zetaZ_series(split, n_max).mul_tpoly(pole_pair_poly(r));

    std::vector<std::pair<int, MotElt>> bad;
    for (int k = n1 + 2; k <= n_max - 1; ++k)
        if (!prod.coeff(k).is_zero()) bad.emplace_back(k, prod.coeff(k));

    MotSeries poly(prod.lo(), n1 + 1, true, true);
    for (int k = prod.lo(); k <= n1 + 1; ++k) poly.set(k, prod.coeff(k));
    return {std::move(poly), bad.empty(), std::move(bad)};
}

struct CriticalValueReport {
    MotElt value;     // P(L^{-r})
    MotElt expected;  // L^{-1+deg V} (1 - [P^{-r}])
    MotElt defect;    // value - expected (must be zero)
};

/// Value of (t-1)(t-L^{-r}) zeta Z at t = L^{-r} against the closed form.
inline CriticalValueReport value_at_critical(const SplittingType& split) {
    const int r = split.rank();
    RationalityReport w = rationality_witness(
        split, stabilization_index(split) + 5);
    if (!w.all_zero)
        throw window_error("rationality residuals nonzero for " + split.str());
    MotElt value = w.poly.eval_at_lefschetz_pow(-r);
    MotElt expected =
        (MotElt::one() - projective_class(-r)).shifted(-1 + split.degree());
    return {value, expected, value - expected};
}

/// [X_n(V)] - L^{r(n+1)+deg V} [X_{-2-n}(V*)] - [P^{r(n+1)+deg V-1}]
/// at genus 0; identically zero.
inline MotElt motivic_rr_defect(const SplittingType& split, int n) {
    const int r = split.rank();
    const int deg = split.degree();
    const int shift = r * (n + 1) + deg;
    MotElt lhs = x_n_class(split, n);
    MotElt rhs = x_n_class(split.dual(), -2 - n).shifted(shift);
    return lhs - rhs - projective_class(shift - 1);
}

struct FunceqReport {
    bool all_zero;
    std::vector<std::pair<int, MotElt>> defects;
};

/// Functional equation at the rational-function level: with
/// P = (t-1)(t-L^{-r}) zeta Z for V and P* the same for V*, the identity
/// zeta(t)Z(V,t) = L^{deg V - r} t^{-2} zeta(L^{-r}t^{-1}) Z(V*, L^{-r}t^{-1})
/// reduces to P(t) = L^{deg V} P*(L^{-r} t^{-1}) as Laurent polynomials.
inline FunceqReport funceq_defect_motivic(const SplittingType& split,
                                          int n_max) {
    const int r = split.rank();
    SplittingType dual = split.dual();
    int need = std::max(stabilization_index(split), stabilization_index(dual)) + 5;
    if (n_max < need)
        throw window_error("functional equation needs N >= " +
                           std::to_string(need));
    RationalityReport wp = rationality_witness(split, n_max);
    RationalityReport wd = rationality_witness(dual, n_max);
    if (!wp.all_zero || !wd.all_zero)
        throw window_error("rationality residuals nonzero");

    MotSeries rhs = wd.poly.substitute_inv(r).scaled(
        MotElt::term(1, split.degree()));
    int lo = std::min(wp.poly.lo(), rhs.lo());
    int hi = std::max(wp.poly.hi(), rhs.hi());
    FunceqReport rep{true, {}};
    for (int k = lo; k <= hi; ++k) {
        MotElt d = wp.poly.coeff(k) - rhs.coeff(k);
        if (!d.is_zero()) {
            rep.all_zero = false;
            rep.defects.emplace_back(k, d);
        }
    }
    return rep;
}

struct LemmaPolyReport {
    bool vanishes;     // coefficients 2 .. N-1 of g are zero
    MotElt value;      // g(L^{-a})
    MotElt expected;   // L^{b-a} (1 - [P^{-a}])
    MotElt defect;
    MotElt g0, g1;     // the polynomial part
};

/// g(t) = (t-1)(t-L^{-a}) sum_{n>=0} [P^{an+b}] t^n is a linear
/// polynomial with g(L^{-a}) = L^{b-a}(1 - [P^{-a}]).
inline LemmaPolyReport lemma_poly_check(int a, int b, int n_max) {
    if (n_max < 4) throw domain_error("lemma check needs N >= 4");
    MotSeries s(0, n_max, true, false);
    for (int n = 0; n <= n_max; ++n) s.set(n, projective_class(a * n + b));
    MotSeries g = s.mul_tpoly(pole_pair_poly(a));
    bool ok = true;
    for (int k = 2; k <= n_max - 1; ++k)
        if (!g.coeff(k).is_zero()) ok = false;
    MotElt value = g.coeff(0) + g.coeff(1).shifted(-a);
    MotElt expected = (MotElt::one() - projective_class(-a)).shifted(b - a);
    return {ok, value, expected, value - expected, g.coeff(0), g.coeff(1)};
}

/// Two-sided vanishing: the negative-index companion series, pushed
/// through the same denominator, is the negative of the polynomial part
/// (so the full two-sided sum is the zero rational function).
inline bool lemma_two_sided_check(int a, int b, int n_max) {
    LemmaPolyReport pos = lemma_poly_check(a, b, n_max);
    MotSeries neg(-n_max, -1, false, true);
    for (int n = -n_max; n <= -1; ++n) neg.set(n, projective_class(a * n + b));
    MotSeries g_neg = neg.mul_tpoly(pole_pair_poly(a));
    for (int k = g_neg.lo(); k <= -1; ++k)
        if (!g_neg.coeff(k).is_zero()) return false;
    return pos.vanishes && g_neg.coeff(0) == -pos.g0 && g_neg.coeff(1) == -pos.g1;
}

/// Residue of the specialized height zeta function at t = q^{-r}:
/// -q^{deg V} (1 - q^{-r}) (1 - q^{1-r}) / (q - 1), exact.
inline Rat residue_specialized(const SplittingType& split, i64 q) {
    if (q < 2) throw domain_error("specialization needs q >= 2");
    const int r = split.rank();
    Rat qr(q);
    return -(qr.pow(split.degree())) * (Rat(1) - qr.pow(-r)) *
           (Rat(1) - qr.pow(1 - r)) / (qr - Rat(1));
}

/// Independent route: residue extracted from the specialized rational
/// function. Z_mu(t) = -P_mu(t)(1 - qt) / (t - q^{-r}) ... (1-t cancels),
/// so the residue at t = q^{-r} is -P_mu(q^{-r}) (1 - q^{1-r}).
inline Rat residue_specialized_witness(const SplittingType& split, i64 q) {
    if (q < 2) throw domain_error("specialization needs q >= 2");
    const int r = split.rank();
    RationalityReport w =
        rationality_witness(split, stabilization_index(split) + 5);
    if (!w.all_zero) throw window_error("rationality residuals nonzero");
    Rat p_at(0);
    Rat qinv_r = Rat(q).pow(-r);
    for (int k = w.poly.lo(); k <= w.poly.hi(); ++k)
        p_at += w.poly.coeff(k).specialize(q) * qinv_r.pow(k);
    return -p_at * (Rat(1) - Rat(q).pow(1 - r));
}

}  // namespace hz

#endif  // HEIGHTZETA_MOTIVIC_HPP
