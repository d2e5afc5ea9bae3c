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

// Ellipsoid traversal q(x) <= R^2 by recursive Cholesky bounds
// (Fincke-Pohst layering). The floating-point interval at each level is
// widened so rounding can never exclude a candidate; callers that need an
// exact boundary re-test membership in rational arithmetic.

#ifndef HEIGHTZETA_LATTICE_HPP
#define HEIGHTZETA_LATTICE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "heightzeta/errors.hpp"
#include "heightzeta/linalg.hpp"

namespace hz {

/// Visit every nonzero integer vector with q(x) <= radius_sq (possibly a
/// few just outside; never misses one inside). The callback receives the
/// coordinates and the floating-point value of q(x).
/// Traversal order is deterministic: coordinates increase from the last
/// level down, which makes emitted sequences reproducible run to run.
inline void enumerate_ellipsoid(
    const Cholesky& chol, double radius_sq,
    const std::function<void(const std::vector<i64>&, double)>& visit,
    std::uint64_t max_points = 4000000000ULL) {
    const int n = chol.n;
    if (n == 0) return;
    const double rsq = radius_sq * (1.0 + 1e-9) + 1e-12;

    std::vector<i64> x(n, 0);
    std::vector<double> center(n, 0.0);   // c_i given x_{i+1..n-1}
    std::vector<double> rem(n + 1, 0.0);  // budget left at each level
    std::vector<i64> hi(n, 0);
    std::uint64_t count = 0;

    // iterative depth-first descent, level n-1 down to 0
    int level = n - 1;
    rem[n] = rsq;
    auto prepare = [&](int i) {
        double c = 0.0;
        for (int j = i + 1; j < n; ++j) c += chol.l[i][j] * static_cast<double>(x[j]);
        center[i] = c;
        double t = std::sqrt(std::max(0.0, rem[i + 1] / chol.d[i]));
        t = t * (1.0 + 1e-10) + 1e-9;
        x[i] = static_cast<i64>(std::ceil(-c - t));
        hi[i] = static_cast<i64>(std::floor(-c + t));
    };
    prepare(level);
    while (true) {
        if (x[level] > hi[level]) {
            ++level;
            if (level >= n) break;
            ++x[level];
            continue;
        }
        double off = static_cast<double>(x[level]) + center[level];
        double used = chol.d[level] * off * off;
        if (used > rem[level + 1] + 1e-12 * (1.0 + rem[level + 1])) {
            ++x[level];
            continue;
        }
        rem[level] = rem[level + 1] - used;
        if (level == 0) {
            bool zero = true;
            for (int j = 0; j < n; ++j)
                if (x[j] != 0) {
                    zero = false;
                    break;
                }
            if (!zero) {
                if (++count > max_points)
                    throw budget_error("ellipsoid enumeration too large");
                visit(x, rsq - rem[0]);
            }
            ++x[0];
        } else {
            --level;
            prepare(level);
        }
    }
}

}  // namespace hz

#endif  // HEIGHTZETA_LATTICE_HPP
