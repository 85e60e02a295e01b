// SPDX-License-Identifier: MIT
#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "rcgc/integrals.hpp"
#include "rcgc/oracle.hpp"

using namespace rcgc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const double inf = std::numeric_limits<double>::infinity();

double pI_quadrature(const PIKernel& kr) {
    const int n = 2 * kr.p + (kr.qp - kr.q).as_int();
    return integrate_1d<double>(
        [&](double t) {
            const double h = 0.5 * (kr.theta1 - t);
            return std::sin(t) * std::pow(std::cos(h), kr.k.twice()) * std::pow(std::tan(h), n);
        },
        kr.a, kr.b, 1e-14);
}

}  // namespace

TEST_CASE("I_s antiderivative") {
    CHECK(I_s_antiderivative(1, 0, 1, 0, 0, 0.0) == 0.0);
    CHECK_THAT(I_s_antiderivative(1, 0, 1, 0, 0, -inf), WithinAbs(0.25, 1e-15));
    CHECK_THAT(I_s_antiderivative(1, 0, 1, 0, 0, inf), WithinAbs(0.25, 1e-15));
    const HalfInt h = HalfInt::parse("1/2");
    CHECK_THAT(I_s_antiderivative(0, 0, HalfInt::parse("3/2"), h, h, 1.0), WithinRel(0.506759859850359059, 1e-13));
    CHECK_THROWS_AS(I_s_antiderivative(0, 0, 1, 1, 0, 0.5), domain_error);
    CHECK_THROWS_AS(I_s_antiderivative(3, 0, 1, 0, 0, 0.5), domain_error);
    // t^6 / (1 + t^2)^2 diverges at infinity.
    CHECK_THROWS_AS(I_s_antiderivative(2, 2, 0, 0, 0, inf), divergence_error);

    std::mt19937 rng(1);
    std::uniform_real_distribution<double> uz(-6.0, 6.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int tk = trial % 7, s = trial % 3;
        const HalfInt k = HalfInt::from_twice(tk);
        const HalfInt q = HalfInt::from_twice(-tk + 2 * static_cast<int>(rng() % (tk + 1)));
        const HalfInt qp = HalfInt::from_twice(-tk + 2 * static_cast<int>(rng() % (tk + 1)));
        const int p = static_cast<int>(rng() % 3);
        const int n = 2 * p + (qp - q).as_int() + s;
        if (n < 0) continue;
        const double z = uz(rng);
        const double B = k.value() + 2.0;
        const double quad = integrate_1d<double>([&](double t) { return std::pow(t, n) / std::pow(1 + t * t, B); }, 0.0, z);
        REQUIRE_THAT(I_s_antiderivative(s, p, k, q, qp, z), WithinAbs(quad, 1e-12 * std::max(1.0, std::abs(quad))));
    }
}

TEST_CASE("pI examples") {
    const double v = pI({2, 0, 0, 1, pi / 3, 0.0, pi / 3, 1});
    CHECK_THAT(v, WithinAbs(1.0 / 48.0, 1e-14));
    CHECK_THAT(pI({1, 0, 0, 0, 0.0, 0.0, pi, 1}), WithinAbs(1.0, 1e-14));
    CHECK(pI({1, 0, 0, 0, 0.4, 0.7, 0.7, 1}) == 0.0);
    CHECK_THROWS_AS(pI({1, 0, 0, 0, 0.4, 0.0, pi, -1}), domain_error);
    CHECK_THROWS_AS(pI({1, 0, 0, 0, 0.4, 0.0, pi, 2}), domain_error);
}

TEST_CASE("pI agrees with quadrature") {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> ut(0.05, pi - 0.05), u(0.0, 1.0);
    double worst = 0.0;
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int tk = trial % 9;
        const HalfInt k = HalfInt::from_twice(tk);
        const HalfInt q = HalfInt::from_twice(-tk + 2 * static_cast<int>(rng() % (tk + 1)));
        const HalfInt qp = HalfInt::from_twice(-tk + 2 * static_cast<int>(rng() % (tk + 1)));
        auto [lo, hi] = p_range(k, q, qp);
        const int p = lo + static_cast<int>(rng() % (hi - lo + 1));
        if (2 * p + (qp - q).as_int() < 0) continue;
        const double t1 = ut(rng);
        double a = pi * u(rng), b = pi * u(rng);
        const PIKernel kr{k, q, qp, p, t1, std::min(a, b), std::max(a, b), 1};
        const double ref = pI_quadrature(kr);
        worst = std::max(worst, std::abs(pI(kr) - ref) / std::max(1.0, std::abs(ref)));
        ++checked;
    }
    CHECK(checked > 100);
    CHECK(worst < 1e-11);
}

TEST_CASE("Beta boundary forms") {
    for (int tk = 0; tk <= 8; ++tk) {
        const HalfInt k = HalfInt::from_twice(tk);
        for (HalfInt q = -k; q <= k; q += 1)
            for (HalfInt qp = -k; qp <= k; qp += 1) {
                auto [lo, hi] = p_range(k, q, qp);
                for (int p = lo; p <= hi; ++p) {
                    if (2 * p + (qp - q).as_int() < 0) continue;
                    const double at0 = pI({k, q, qp, p, 0.0, 0.0, pi, 1});
                    const double atpi = pI({k, q, qp, p, pi, 0.0, pi, 1});
                    REQUIRE_THAT(pI_boundary(k, q, qp, p, false), WithinAbs(at0, 1e-12));
                    REQUIRE_THAT(pI_boundary(k, q, qp, p, true), WithinAbs(atpi, 1e-12));
                }
            }
    }
}

TEST_CASE("sine-cosine moments") {
    CHECK_THAT(pinchon_check(1, 2), WithinRel(4.0 / 15.0, 1e-14));
    CHECK(pinchon_check(2, 3) == 0.0);
    for (int tk = 0; tk <= 8; tk += 2) {
        const HalfInt k = HalfInt::from_twice(tk);
        for (int g = 0; g <= 6; ++g) {
            const double ref = integrate_1d<double>(
                [&](double t) { return std::pow(std::sin(t), tk + 1) * std::pow(std::cos(t), g); }, 0.0, pi);
            REQUIRE_THAT(pinchon_check(k, g), WithinAbs(ref, 1e-13));
        }
    }
    CHECK_THROWS_AS(pinchon_check(1, -1), domain_error);
}

TEST_CASE("S integral examples") {
    CHECK(std::abs(S_integral(0, 0, 0, {1.0, 2.0}) - 4 * pi) < 1e-12);
    CHECK_THAT(S_integral(2, 0, 2, {pi / 2, 0.0}).real(), WithinRel(2.5650996603237282, 1e-12));
    CHECK(S_integral(2, 2, 0, {0.8, 1.1}) == 0.0);
    CHECK(S_integral(2, 0, 1, {0.8, 1.1}) == 0.0);
    // Odd q is not forced to vanish.
    CHECK(std::abs(S_integral(1, 1, 0, {pi / 6, 0.3}) - cnum(0, -3.97931)) < 1e-5);
}

TEST_CASE("S integral agrees with area quadrature") {
    const SpherePoint xs[] = {{pi / 6, 0.3}, {1.1, 2.0}, {2.0, 4.0}, {0.7, 5.5}};
    double worst = 0.0;
    for (int tk = 0; tk <= 4; ++tk) {
        const HalfInt k = HalfInt::from_twice(tk);
        for (HalfInt q = -k; q <= k; q += 1)
            for (HalfInt qp = -k; qp <= k; qp += 1)
                for (const auto& x : xs)
                    worst = std::max(worst, std::abs(S_integral(k, q, qp, x) - s_integral_oracle(k, q, qp, x, 1e-10)));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("eta sphere integral agrees with quadrature") {
    const SpherePoint xs[] = {{0.4, 0.3}, {1.9, 4.0}};
    for (int k = 0; k <= 3; ++k)
        for (int q = -k; q <= k; ++q)
            for (int qp = -k; qp <= k; ++qp)
                for (const auto& x1 : xs) {
                    const cnum ref =
                        integrate_sphere([&](SpherePoint x2) { return eta(k, q, qp, x1, x2); }, {32, 64, 1e-11, 5});
                    REQUIRE(std::abs(eta_sphere_integral(k, q, qp, x1) - ref) < 1e-9);
                }
    CHECK_THROWS_AS(eta_sphere_integral(HalfInt::parse("1/2"), HalfInt::parse("1/2"), HalfInt::parse("1/2"), {1, 1}),
                    domain_error);
}
