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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "heightzeta/pcount.hpp"
#include "heightzeta/zclass.hpp"

using namespace hz;
using std::abs;

namespace {
const FieldDescriptor kQ = field_descriptor("Q");
constexpr double kZeta3 = 1.2020569031595942854;

RatMat mat2(Rat a, Rat b, Rat c, Rat d) {
    RatMat m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}
}  // namespace

TEST_CASE("rank-1 star identity: 2 xi(s) = J(O,s) + J(O,1-s) + 1/(s-1) - 1/s") {
    auto line = ArakelovBundle::identity(1);
    for (cplx s : {cplx(2, 0), cplx(3.5, 0), cplx(2, 1)}) {
        cplx lhs = 2.0 * xi(kQ, s).value;
        cplx rhs = j_integral(line, s, 1e-10).value +
                   j_integral(line, 1.0 - s, 1e-10).value +
                   1.0 / (s - 1.0) - 1.0 / s;
        CHECK(abs(lhs - rhs) <= 1e-8);
    }
}

TEST_CASE("j_integral two-resolution agreement and integrand bound") {
    auto v = ArakelovBundle::make(mat2(2, 1, 1, 1));
    AnalyticValue coarse = j_integral(v, cplx(2.0, 0.5), 1e-6);
    AnalyticValue fine = j_integral(v, cplx(2.0, 0.5), 1e-10);
    CHECK(abs(coarse.value - fine.value) <=
          coarse.abs_error + fine.abs_error);

    // z = 0: plain mass of phi along the twist line, finite and positive
    auto line = ArakelovBundle::identity(1);
    AnalyticValue j0a = j_integral(line, cplx(0, 0), 1e-6);
    AnalyticValue j0b = j_integral(line, cplx(0, 0), 1e-10);
    CHECK(j0a.value.real() > 0.0);
    CHECK(abs(j0a.value - j0b.value) <= j0a.abs_error + j0b.abs_error);

    // the integrand at t = -5 sits below its certificate
    ThetaEvaluator theta(v);
    double ph = theta.phi(-5.0, 1e-30);
    CHECK(ph <= phi_upper_bound(v, -5.0));
}

TEST_CASE("continued zeta of the point is identically 1") {
    auto p0 = ArakelovBundle::identity(1);
    for (cplx s : {cplx(0.5, 0), cplx(2, 0), cplx(3, 1)}) {
        ContinuationResult r = continued_zeta(p0, s, 1e-9);
        CHECK(abs(r.value.value - cplx(1, 0)) <= 1e-7);
    }
    // apparent poles at s = 0 and s = 1 cancel; nearby evaluation stays 1
    ContinuationResult near = continued_zeta(p0, cplx(1e-3, 0), 1e-9);
    CHECK(abs(near.value.value - cplx(1, 0)) <= 1e-6);
}

TEST_CASE("continuation matches direct summation inside the half-plane") {
    auto id2 = ArakelovBundle::identity(2);
    auto skew = ArakelovBundle::make(mat2(2, 1, 1, 1));
    for (const auto& v : {id2, skew}) {
        for (cplx s : {cplx(3, 0), cplx(2.5, 0), cplx(4, 1)}) {
            AnalyticValue direct = dirichlet_partial(v, s, Rat(400 * 400));
            ContinuationResult cont = continued_zeta(v, s, 1e-8);
            CHECK(abs(cont.value.value - direct.value) <=
                  direct.abs_error + cont.value.abs_error);
        }
    }
    auto id3 = ArakelovBundle::identity(3);
    for (cplx s : {cplx(4, 0), cplx(3.5, 0), cplx(5, 1)}) {
        AnalyticValue direct = dirichlet_partial(id3, s, Rat(120 * 120));
        ContinuationResult cont = continued_zeta(id3, s, 1e-8);
        CHECK(abs(cont.value.value - direct.value) <=
              direct.abs_error + cont.value.abs_error);
    }
}

TEST_CASE("continuation parts satisfy the star identity") {
    // 2 xi(s) Z = J(V,s) + N J(V*,r-s) + N/(s-r) - 1/s, per the returned parts
    auto v = ArakelovBundle::make(mat2(2, 1, 1, 1));
    for (cplx s : {cplx(2.7, 0.0), cplx(1.4, 0.8)}) {
        ContinuationResult r = continued_zeta(v, s, 1e-9);
        cplx lhs = 2.0 * xi(kQ, s).value * r.value.value;
        cplx rhs = r.j_self.value + r.j_dual.value + r.pole_r + r.pole_zero;
        double allow = r.j_self.abs_error + r.j_dual.abs_error +
                       2.0 * xi(kQ, s).abs_error * std::abs(r.value.value) +
                       2.0 * xi(kQ, s).mod() * r.value.abs_error;
        CHECK(abs(lhs - rhs) <= allow + 1e-12);
    }
}

TEST_CASE("main residue") {
    CHECK(std::fabs(residue_main(ArakelovBundle::identity(2)) - 6.0 / M_PI) <=
          1e-12);
    CHECK(std::fabs(residue_main(ArakelovBundle::identity(3)) -
                    2.0 * M_PI / kZeta3) <= 1e-10);
    // norm homogeneity under twisting
    double d = 0.7;
    CHECK(residue_main(ArakelovBundle::identity(2).twisted(d)) ==
          doctest::Approx(std::exp(2 * d) * 6.0 / M_PI).epsilon(1e-12));
}

TEST_CASE("residue extraction near the pole") {
    auto id2 = ArakelovBundle::identity(2);
    double res = residue_main(id2);

    ContinuationResult r = continued_zeta(id2, cplx(2.0 + 1e-4, 0), 1e-10);
    double extracted = (1e-4 * r.value.value).real();
    CHECK(std::fabs(extracted - res) / res <= 1e-4);

    ContinuationResult r3 = continued_zeta(id2, cplx(2.0 + 1e-3, 0), 1e-10);
    double extracted3 = (1e-3 * r3.value.value).real();
    CHECK(std::fabs(extracted3 - res) / res <= 1e-3);

    // Richardson extrapolation over eps = 1e-2, 1e-3, 1e-4 kills the
    // linear term of the Laurent expansion
    double f2 = (1e-2 * continued_zeta(id2, cplx(2.01, 0), 1e-10).value.value).real();
    double f3 = (1e-3 * continued_zeta(id2, cplx(2.001, 0), 1e-10).value.value).real();
    double f4 = (1e-4 * continued_zeta(id2, cplx(2.0001, 0), 1e-10).value.value).real();
    double r34 = (10.0 * f4 - f3) / 9.0;
    double r23 = (10.0 * f3 - f2) / 9.0;
    CHECK(std::fabs(r34 - res) <= 1e-4);
    CHECK(std::fabs(r34 - res) < std::fabs(r23 - res) + 1e-9);
}

TEST_CASE("poles and conditioning guards") {
    auto id2 = ArakelovBundle::identity(2);
    CHECK_THROWS_AS(continued_zeta(id2, cplx(0, 0), 1e-8), pole_error);
    CHECK_THROWS_AS(continued_zeta(id2, cplx(2, 0), 1e-8), pole_error);
    // first nontrivial zero of zeta: quotient is declared ill-conditioned
    CHECK_THROWS_AS(continued_zeta(id2, cplx(0.5, 14.134725), 1e-8),
                    ill_conditioned_error);
}

TEST_CASE("functional equation defect") {
    auto skew = ArakelovBundle::make(mat2(2, 1, 1, 1));
    CHECK(funceq_defect(skew, cplx(0.7, 0.3), 1e-9) <= 1e-6);
    auto id2 = ArakelovBundle::identity(2);
    CHECK(funceq_defect(id2, cplx(1.0, 0.0), 1e-9) <= 1e-8);
    CHECK(funceq_defect(id2.twisted(1.0), cplx(2.4, 0.0), 1e-9) <= 1e-6);
}

TEST_CASE("wan k-th zeta integrals") {
    AnalyticValue w0 = wan_xi_k(0, cplx(2, 0), 1e-9);
    CHECK(abs(w0.value - xi(kQ, cplx(2, 0)).value) <= 1e-7);
    AnalyticValue w0b = wan_xi_k(0, cplx(3, 0), 1e-9);
    CHECK(abs(w0b.value - xi(kQ, cplx(3, 0)).value) <= 1e-7);

    AnalyticValue coarse = wan_xi_k(1, cplx(4, 0), 1e-6);
    AnalyticValue fine = wan_xi_k(1, cplx(4, 0), 1e-9);
    CHECK(coarse.value.real() > 0.0);
    CHECK(abs(coarse.value - fine.value) <= coarse.abs_error + fine.abs_error);

    CHECK_THROWS_AS(wan_xi_k(1, cplx(1.5, 0), 1e-8), divergent_integral_error);
}

TEST_CASE("wan formula") {
    CHECK(wan_formula_defect(0, cplx(2, 0), 1e-9) <= 1e-7);
    CHECK(wan_formula_defect(1, cplx(3, 0), 1e-8) <= 1e-5);
    CHECK(wan_formula_defect(2, cplx(4, 0), 1e-8) <= 1e-5);
}

TEST_CASE("tauberian prediction formula") {
    CHECK(tauberian_predict(1, 1, 1, std::exp(1.0)) ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(tauberian_predict(2, 1, 6.0 / M_PI, 100) ==
          doctest::Approx(3.0 / M_PI * 1e4).epsilon(1e-14));
    CHECK(tauberian_predict(2, 2, 1, 10) ==
          doctest::Approx(50.0 * std::log(10.0)).epsilon(1e-14));
    CHECK_THROWS_AS(tauberian_predict(2, 1, 1, 0.5), domain_error);
}
