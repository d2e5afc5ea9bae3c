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
#include <random>

#include "heightzeta/numfield.hpp"

using namespace hz;

TEST_CASE("field registry") {
    FieldDescriptor q = field_descriptor("Q");
    CHECK(q.r1 == 1);
    CHECK(q.r2 == 0);
    CHECK(q.discriminant == 1);
    CHECK(q.w == 2);
    CHECK(q.alpha == 1.0);

    FieldDescriptor qi = field_descriptor("Q(i)");
    CHECK(qi.w == 4);
    CHECK(qi.discriminant == -4);
    CHECK(qi.r2 == 1);

    CHECK_THROWS_AS(field_descriptor("Q(sqrt5)"), unsupported_field_error);

    CHECK(q.local_degrees.at("oo") == 1);
    CHECK(qi.local_degrees.at("oo") == 2);

    for (const auto& f : {q, qi}) {
        CHECK(f.alpha == f.regulator * f.class_number);
        CHECK(std::fabs(f.canonical_degree -
                        std::log(std::fabs(double(f.discriminant)))) < 1e-14);
    }
}

TEST_CASE("principal divisors") {
    CHECK_THROWS_AS(principal_divisor(Rat(0)), domain_error);

    ArithDivisor one = principal_divisor(Rat(1));
    CHECK(one.infinite_part == 0.0);
    CHECK(one.finite_part.empty());

    ArithDivisor two = principal_divisor(Rat(2));
    CHECK(two.infinite_part == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
    CHECK(two.finite_part.at(2) == 1);
    CHECK(two.finite_part.size() == 1);

    ArithDivisor f = principal_divisor(Rat(-3, 4));
    CHECK(f.infinite_part == doctest::Approx(-std::log(0.75)).epsilon(1e-15));
    CHECK(f.finite_part.at(2) == -2);
    CHECK(f.finite_part.at(3) == 1);
}

TEST_CASE("divisor degree and the product formula") {
    ArithDivisor zero;
    CHECK(divisor_degree(zero) == 0.0);

    ArithDivisor d;
    d.finite_part[2] = 3;
    CHECK(divisor_degree(d) == doctest::Approx(3 * std::log(2.0)).epsilon(1e-15));

    for (Rat f : {Rat(2), Rat(-3, 4), Rat(7, 5)})
        CHECK(std::fabs(divisor_degree(principal_divisor(f))) <= 1e-12);
}

TEST_CASE("principal divisor is additive") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<i64> dist(1, 60);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int it = 0; it < 40; ++it) {
        Rat f(dist(rng) * (sign(rng) ? 1 : -1), dist(rng));
        Rat g(dist(rng) * (sign(rng) ? 1 : -1), dist(rng));
        ArithDivisor sum = principal_divisor(f) + principal_divisor(g);
        ArithDivisor prod = principal_divisor(f * g);
        CHECK(sum.finite_part == prod.finite_part);
        CHECK(std::fabs(sum.infinite_part - prod.infinite_part) <= 1e-12);
    }
}

TEST_CASE("effectivity") {
    ArithDivisor neg;
    neg.finite_part[2] = -1;
    CHECK(effectivity(neg) == 0.0);

    ArithDivisor zero;
    CHECK(effectivity(zero) == doctest::Approx(std::exp(-M_PI)).epsilon(1e-15));

    double last = 0.0;
    for (double x = -3.0; x <= 12.0; x += 0.25) {
        ArithDivisor d;
        d.infinite_part = x;
        double e = effectivity(d);
        CHECK(e >= last);
        CHECK(e >= 0.0);
        CHECK(e <= 1.0);
        last = e;
    }
    ArithDivisor far;
    far.infinite_part = 40.0;
    CHECK(effectivity(far) == doctest::Approx(1.0).epsilon(1e-15));
}
