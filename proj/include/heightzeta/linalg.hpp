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

// Small dense matrices: exact rational (Gram matrices, their inverses and
// minors) and double (Cholesky factors for enumeration bounds). Ranks in
// this project are single digits, so plain Gaussian elimination is fine.

#ifndef HEIGHTZETA_LINALG_HPP
#define HEIGHTZETA_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "heightzeta/errors.hpp"
#include "heightzeta/rational.hpp"

namespace hz {

/// Dense matrix with exact rational entries, row-major.
class RatMat {
 public:
    RatMat() : n_(0) {}
    explicit RatMat(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rat(0)) {}

    static RatMat identity(int n) {
        RatMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = Rat(1);
        return m;
    }

    int size() const { return n_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Rat& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * n_ + j];
    }

    bool symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    /// Determinant by exact Gaussian elimination with partial pivoting.
    Rat det() const {
        RatMat m = *this;
        Rat d(1);
        for (int c = 0; c < n_; ++c) {
            int p = -1;
            for (int r = c; r < n_; ++r)
                if (!m(r, c).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) return Rat(0);
            if (p != c) {
                for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(c, j));
                d = -d;
            }
            d *= m(c, c);
            Rat inv = m(c, c).inv();
            for (int r = c + 1; r < n_; ++r) {
                if (m(r, c).is_zero()) continue;
                Rat f = m(r, c) * inv;
                for (int j = c; j < n_; ++j) m(r, j) -= f * m(c, j);
            }
        }
        return d;
    }

    /// Determinant of the leading k-by-k block.
    Rat leading_minor(int k) const {
        RatMat m(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
        return m.det();
    }

    /// Exact inverse via Gauss-Jordan; throws if singular.
    RatMat inverse() const {
        RatMat m = *this;
        RatMat inv = identity(n_);
        for (int c = 0; c < n_; ++c) {
            int p = -1;
            for (int r = c; r < n_; ++r)
                if (!m(r, c).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) throw domain_error("singular matrix");
            if (p != c)
                for (int j = 0; j < n_; ++j) {
                    std::swap(m(p, j), m(c, j));
                    std::swap(inv(p, j), inv(c, j));
                }
            Rat piv = m(c, c).inv();
            for (int j = 0; j < n_; ++j) {
                m(c, j) *= piv;
                inv(c, j) *= piv;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == c || m(r, c).is_zero()) continue;
                Rat f = m(r, c);
                for (int j = 0; j < n_; ++j) {
                    m(r, j) -= f * m(c, j);
                    inv(r, j) -= f * inv(c, j);
                }
            }
        }
        return inv;
    }

    /// Block-diagonal concatenation.
    static RatMat block_diag(const RatMat& a, const RatMat& b) {
        RatMat m(a.size() + b.size());
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
        for (int i = 0; i < b.size(); ++i)
            for (int j = 0; j < b.size(); ++j)
                m(a.size() + i, a.size() + j) = b(i, j);
        return m;
    }

    /// Congruence transform U^T G U for an integer matrix U (exact).
    RatMat congruence(const std::vector<std::vector<i64>>& u) const {
        int n = n_;
        RatMat gu(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat s(0);
                for (int k = 0; k < n; ++k) s += (*this)(i, k) * Rat(u[k][j]);
                gu(i, j) = s;
            }
        RatMat out(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat s(0);
                for (int k = 0; k < n; ++k) s += Rat(u[k][i]) * gu(k, j);
                out(i, j) = s;
            }
        return out;
    }

    /// Quadratic form x^T G x, exact.
    Rat quadratic_form(const std::vector<i64>& x) const {
        Rat s(0);
        for (int i = 0; i < n_; ++i) {
            // diagonal plus doubled upper triangle
            s += (*this)(i, i) * Rat(x[i]) * Rat(x[i]);
            for (int j = i + 1; j < n_; ++j)
                s += Rat(2) * (*this)(i, j) * Rat(x[i]) * Rat(x[j]);
        }
        return s;
    }

    std::vector<double> to_double() const {
        std::vector<double> d(a_.size());
        for (size_t i = 0; i < a_.size(); ++i) d[i] = a_[i].to_double();
        return d;
    }

 private:
    int n_;
    std::vector<Rat> a_;
};

/// LDL^T factorization of a symmetric positive-definite matrix in doubles.
/// q(x) = sum_i d[i] * (x_i + sum_{j>i} l[i][j] x_j)^2.
struct Cholesky {
    int n = 0;
    std::vector<double> d;               // pivots
    std::vector<std::vector<double>> l;  // unit upper-triangular multipliers

    static Cholesky build(const std::vector<double>& g, int n) {
        std::vector<std::vector<double>> a(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = g[static_cast<size_t>(i) * n + j];
        Cholesky c;
        c.n = n;
        c.d.assign(n, 0.0);
        c.l.assign(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i) {
            c.d[i] = a[i][i];
            if (!(c.d[i] > 0.0))
                throw invalid_metric_error("matrix is not positive definite");
            for (int j = i + 1; j < n; ++j) c.l[i][j] = a[i][j] / c.d[i];
            // Schur complement of the pivot, upper triangle only
            for (int r = i + 1; r < n; ++r)
                for (int s = r; s < n; ++s) a[r][s] -= c.l[i][r] * a[i][s];
        }
        return c;
    }

    double quadratic_form(const std::vector<double>& x) const {
        double q = 0.0;
        for (int i = 0; i < n; ++i) {
            double t = x[i];
            for (int j = i + 1; j < n; ++j) t += l[i][j] * x[j];
            q += d[i] * t * t;
        }
        return q;
    }
};

/// Lower bound on the smallest eigenvalue of a symmetric positive-definite
/// rational matrix: 1 / ||G^{-1}||_inf, the row sums taken exactly and the
/// final division given a 1e-12 slack for double rounding.
inline double lambda_min_lower_bound(const RatMat& g) {
    RatMat inv = g.inverse();
    Rat row_max(0);
    for (int i = 0; i < g.size(); ++i) {
        Rat s(0);
        for (int j = 0; j < g.size(); ++j) s += inv(i, j).abs();
        row_max = std::max(row_max, s);
    }
    if (!(row_max > Rat(0))) throw invalid_metric_error("degenerate Gram matrix");
    return (1.0 - 1e-12) / row_max.to_double();
}

}  // namespace hz

#endif  // HEIGHTZETA_LINALG_HPP
