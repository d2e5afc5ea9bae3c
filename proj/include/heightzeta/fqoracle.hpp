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

// Brute-force section counting for P(V) -> P^1 over small finite fields.
// A degree-d section is a scaling class of tuples of homogeneous forms
// (f_1, ..., f_r), deg f_i = d + a_i, not all zero, whose homogeneous gcd
// is constant: a common factor over F_q is exactly a common zero over the
// algebraic closure, so the gcd test settles the locally-split condition.

#ifndef HEIGHTZETA_FQORACLE_HPP
#define HEIGHTZETA_FQORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "heightzeta/errors.hpp"
#include "heightzeta/motivic.hpp"

namespace hz {

/// Prime fields used by the oracle.
inline bool oracle_prime(int q) { return q == 2 || q == 3 || q == 5; }

namespace fq {

inline int add(int q, int a, int b) { return (a + b) % q; }
inline int sub(int q, int a, int b) { return (a - b % q + q) % q; }
inline int mul(int q, int a, int b) { return (a * b) % q; }

inline int inv(int q, int a) {
    // q is a small prime; Fermat
    int r = 1;
    int e = q - 2;
    int base = a % q;
    while (e > 0) {
        if (e & 1) r = mul(q, r, base);
        base = mul(q, base, base);
        e >>= 1;
    }
    return r;
}

/// Homogeneous form of degree deg in two variables, stored as the
/// coefficients of x^{deg-k} y^k for k = 0..deg. The zero form has an
/// empty coefficient vector.
struct Form {
    int deg = 0;
    std::vector<int> c;

    bool is_zero() const { return c.empty(); }
};

inline Form make_form(int deg, std::vector<int> coeffs) {
    bool zero = std::all_of(coeffs.begin(), coeffs.end(),
                            [](int v) { return v == 0; });
    if (zero) return Form{};
    return Form{deg, std::move(coeffs)};
}

/// Univariate core after stripping x^x_pow y^y_pow and substituting
/// (x, y) = (z, 1); u[i] is the coefficient of z^i.
inline std::vector<int> dehomogenize(const Form& f, int x_pow, int y_pow) {
    int core_deg = f.deg - x_pow - y_pow;
    std::vector<int> u(static_cast<size_t>(core_deg) + 1);
    for (int i = 0; i <= core_deg; ++i)
        u[static_cast<size_t>(i)] = f.c[static_cast<size_t>(f.deg - x_pow - i)];
    return u;
}

inline void trim(std::vector<int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<int> poly_mod(int q, std::vector<int> a,
                                 const std::vector<int>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        int f = mul(q, a.back(), inv(q, b.back()));
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = sub(q, a[off + i], mul(q, f, b[i]));
        trim(a);
    }
    return a;
}

inline std::vector<int> poly_gcd(int q, std::vector<int> a, std::vector<int> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::vector<int> r = poly_mod(q, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace fq

/// Homogeneous gcd of two forms: split off the common powers of the two
/// variables, take the univariate gcd of the dehomogenized cores, and
/// re-homogenize. Degree zero means the section condition holds.
inline fq::Form homogeneous_gcd(int q, const fq::Form& f, const fq::Form& g) {
    if (!oracle_prime(q)) throw domain_error("oracle modulus must be 2, 3 or 5");
    if (f.is_zero() && g.is_zero())
        throw domain_error("gcd of two zero forms");
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;

    auto var_powers = [](const fq::Form& h) {
        int y_pow = 0;
        while (h.c[static_cast<size_t>(y_pow)] == 0) ++y_pow;
        int x_pow = 0;
        while (h.c[static_cast<size_t>(h.deg - x_pow)] == 0) ++x_pow;
        return std::pair<int, int>{x_pow, y_pow};
    };
    auto [fx, fy] = var_powers(f);
    auto [gx, gy] = var_powers(g);
    int cx = std::min(fx, gx);
    int cy = std::min(fy, gy);

    std::vector<int> pf = fq::dehomogenize(f, fx, fy);
    std::vector<int> pg = fq::dehomogenize(g, gx, gy);
    std::vector<int> pu = fq::poly_gcd(q, pf, pg);
    int lead_inv = fq::inv(q, pu.back());
    for (int& v : pu) v = fq::mul(q, v, lead_inv);  // monic representative
    int core_deg = static_cast<int>(pu.size()) - 1;

    // re-homogenize: pu[j] z^j -> pu[j] x^j y^{core_deg - j}
    int deg = core_deg + cx + cy;
    std::vector<int> coeffs(static_cast<size_t>(deg) + 1, 0);
    for (int j = 0; j <= core_deg; ++j) {
        // x-exponent j + cx, y-exponent deg - (j + cx); slot k = y-exponent
        coeffs[static_cast<size_t>(deg - j - cx)] = pu[static_cast<size_t>(j)];
    }
    return fq::make_form(deg, std::move(coeffs));
}

/// Number of F_q-points of Sect_d(P(V)) for a split bundle: scaling
/// classes of coprime form tuples. Enumeration is canonical (first
/// nonzero coefficient 1), so each class appears exactly once.
inline i64 count_sections(int q, const SplittingType& split, int d) {
    if (!oracle_prime(q)) throw domain_error("oracle modulus must be 2, 3 or 5");
    std::vector<int> degs;
    i64 total_coeffs = 0;
    for (int ai : split.a) {
        int deg = d + ai;
        degs.push_back(deg);
        if (deg >= 0) total_coeffs += deg + 1;
    }
    if (total_coeffs == 0) return 0;  // every form is forced to vanish
    if (total_coeffs > 12)
        throw budget_error("section enumeration beyond the coefficient budget");

    const int m = static_cast<int>(total_coeffs);
    std::vector<int> flat(static_cast<size_t>(m), 0);
    i64 count = 0;

    auto tuple_ok = [&]() {
        // build forms and fold the homogeneous gcd
        fq::Form acc;
        bool have = false;
        size_t pos = 0;
        std::vector<fq::Form> forms;
        for (int deg : degs) {
            if (deg < 0) {
                forms.push_back(fq::Form{});
                continue;
            }
            std::vector<int> c(flat.begin() + static_cast<long>(pos),
                               flat.begin() + static_cast<long>(pos) + deg + 1);
            pos += static_cast<size_t>(deg) + 1;
            forms.push_back(fq::make_form(deg, std::move(c)));
        }
        for (const auto& f : forms) {
            if (f.is_zero()) continue;
            if (!have) {
                acc = f;
                have = true;
            } else {
                acc = homogeneous_gcd(q, acc, f);
            }
            if (acc.deg == 0) return true;  // already coprime
        }
        if (!have) return false;  // all zero
        return acc.deg == 0;
    };

    // canonical representatives: first nonzero coefficient at position p
    // equals 1, positions before p are zero, the rest run free
    for (int p = 0; p < m; ++p) {
        std::fill(flat.begin(), flat.end(), 0);
        flat[static_cast<size_t>(p)] = 1;
        int free_count = m - p - 1;
        std::vector<int> odo(static_cast<size_t>(std::max(free_count, 0)), 0);
        for (;;) {
            for (int i = 0; i < free_count; ++i)
                flat[static_cast<size_t>(p + 1 + i)] = odo[static_cast<size_t>(i)];
            if (tuple_ok()) ++count;
            int i = 0;
            while (i < free_count) {
                if (++odo[static_cast<size_t>(i)] < q) break;
                odo[static_cast<size_t>(i)] = 0;
                ++i;
            }
            if (i >= free_count) break;
        }
    }
    return count;
}

}  // namespace hz

#endif  // HEIGHTZETA_FQORACLE_HPP
