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

// Adaptive Simpson quadrature for smooth complex-valued integrands on a
// real interval. The embedded |S_fine - S_coarse|/15 estimate is scaled by
// a safety factor; a minimum subdivision depth guards against deceptive
// early agreement on slowly varying stretches.

#ifndef HEIGHTZETA_QUADRATURE_HPP
#define HEIGHTZETA_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <functional>

#include "heightzeta/analytic.hpp"

namespace hz {

namespace detail {

struct SimpsonState {
    const std::function<cplx(double)>* f;
    double tol;
    int max_depth;
    int min_depth;
    double err_accum;
};

inline cplx simpson_rec(SimpsonState& st, double a, double b, cplx fa, cplx fm,
                        cplx fb, cplx whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    cplx flm = (*st.f)(lm);
    cplx frm = (*st.f)(rm);
    cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    cplx right = (b - m) / 6.0 * (fb + 4.0 * frm + fm);
    cplx sum = left + right;
    double dev = std::abs(sum - whole) / 15.0;
    if (depth >= st.min_depth && (dev <= tol || depth >= st.max_depth)) {
        st.err_accum += dev;
        return sum + (sum - whole) / 15.0;
    }
    return simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Integrate f over [a, b] targeting absolute accuracy tol.
/// The returned abs_error is the accumulated local estimate times a
/// safety factor of 4 (conservative estimate, not a hard certificate).
inline AnalyticValue integrate_adaptive(const std::function<cplx(double)>& f,
                                        double a, double b, double tol,
                                        int min_depth = 4, int max_depth = 28) {
    if (a == b) return {cplx(0.0, 0.0), 0.0};
    detail::SimpsonState st{&f, tol, max_depth, min_depth, 0.0};
    cplx fa = f(a);
    cplx fb = f(b);
    double m = 0.5 * (a + b);
    cplx fm = f(m);
    cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    cplx v = detail::simpson_rec(st, a, b, fa, fm, fb, whole, tol, 0);
    return {v, 4.0 * st.err_accum};
}

}  // namespace hz

#endif  // HEIGHTZETA_QUADRATURE_HPP
