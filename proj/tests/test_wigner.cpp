// SPDX-License-Identifier: MIT
#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "rcgc/geometry.hpp"
#include "rcgc/wigner.hpp"

using namespace rcgc;
using Catch::Matchers::WithinAbs;

namespace {

const HalfInt k52 = HalfInt::parse("5/2"), qm12 = HalfInt::parse("-1/2"), q32 = HalfInt::parse("3/2");

std::vector<std::vector<cnum>> dmatrix(HalfInt k, const EulerAngles& o) {
    const int n = k.twice() + 1;
    std::vector<std::vector<cnum>> m(n, std::vector<cnum>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = wigner_d(k, HalfInt::from_twice(2 * i - k.twice()), HalfInt::from_twice(2 * j - k.twice()), o);
    return m;
}

// ZXZ angles of a rotation matrix, Theta in [0, pi].
EulerAngles zxz_angles(const Mat3& r) {
    EulerAngles o;
    o.theta = std::acos(std::clamp(r[2][2], -1.0, 1.0));
    o.phi = std::atan2(r[0][2], -r[1][2]);
    o.psi = std::atan2(r[2][0], r[2][1]);
    return o;
}

EulerAngles random_angles(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return {two_pi * u(rng), pi * u(rng), two_pi * u(rng)};
}

}  // namespace

TEST_CASE("a and b coefficients") {
    CHECK(std::abs(a_coeff(0, 0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(a_coeff(1, 1, 0) - cnum(0, -std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(a_coeff(k52, qm12, q32) - cnum(-std::sqrt(288.0), 0)) < 1e-12);
    CHECK(b_coeff(0, 0, 0, 0) == 1.0);
    CHECK(b_coeff(1, 0, 0, 0) == 1.0);
    CHECK(b_coeff(1, 0, 0, 1) == -1.0);
    CHECK(b_coeff(1, 0, 0, 2) == 0.0);
    CHECK(b_coeff(1, 1, 0, -1) == 0.0);
    CHECK_THROWS_AS(a_coeff(1, 2, 0), domain_error);
}

TEST_CASE("worked examples") {
    const cnum e1 = std::polar(1.0, pi / 8) * (13.0 - 3.0 * std::sqrt(3.0)) / 32.0;
    const cnum e2 = std::polar(0.25, 5.0 * pi / 8);
    CHECK(std::abs(wigner_d(k52, qm12, q32, {3 * pi / 2, pi / 6, 5 * pi / 4}) - e1) < 1e-13);
    CHECK(std::abs(wigner_d(k52, qm12, q32, {3 * pi / 2, pi / 2, pi / 4}) - e2) < 1e-13);
    CHECK(std::abs(wigner_d_hyp(k52, qm12, q32, {3 * pi / 2, pi / 6, 5 * pi / 4}) - e1) < 1e-13);
    CHECK(std::abs(wigner_d_hyp(k52, qm12, q32, {3 * pi / 2, pi / 2, pi / 4}) - e2) < 1e-13);
}

TEST_CASE("identity rotation and low-rank closed forms") {
    for (int tk = 0; tk <= 8; ++tk) {
        const HalfInt k = HalfInt::from_twice(tk);
        for (HalfInt q = -k; q <= k; q += 1)
            for (HalfInt qp = -k; qp <= k; qp += 1)
                CHECK(std::abs(wigner_d(k, q, qp, {0, 0, 0}) - (q == qp ? 1.0 : 0.0)) < 1e-15);
    }
    const HalfInt h = HalfInt::parse("1/2");
    for (double t : {0.0, 0.3, 1.7, pi}) {
        CHECK(std::abs(wigner_d(h, h, h, {0, t, 0}) - std::cos(t / 2)) < 1e-15);
        CHECK(std::abs(wigner_d_hyp(h, h, h, {0, t, 0}) - std::cos(t / 2)) < 1e-12);
        CHECK(std::abs(wigner_d(1, 0, 0, {0, t, 0}) - std::cos(t)) < 1e-15);
    }
    CHECK(std::abs(wigner_d(3, 0, 0, {0, pi / 2, 0})) < 1e-12);
    CHECK(std::abs(wigner_d_hyp(3, 0, 0, {0, pi / 2, 0})) < 1e-12);
}

TEST_CASE("unitarity for k <= 6") {
    std::mt19937 rng(11);
    for (int tk = 0; tk <= 12; ++tk) {
        const HalfInt k = HalfInt::from_twice(tk);
        const auto m = dmatrix(k, random_angles(rng));
        const int n = tk + 1;
        double worst = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                cnum s = 0.0;
                for (int i = 0; i < n; ++i) s += std::conj(m[i][a]) * m[i][b];
                worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
            }
        REQUIRE(worst < 1e-12);
    }
}

TEST_CASE("conjugation relation") {
    std::mt19937 rng(12);
    for (int tk = 0; tk <= 12; ++tk) {
        const HalfInt k = HalfInt::from_twice(tk);
        const EulerAngles o = random_angles(rng);
        for (HalfInt q = -k; q <= k; q += 1)
            for (HalfInt qp = -k; qp <= k; qp += 1) {
                const cnum lhs = std::conj(wigner_d(k, q, qp, o));
                const cnum rhs = m1pow(q - qp) * wigner_d(k, -q, -qp, o);
                REQUIRE(std::abs(lhs - rhs) < 1e-12);
            }
    }
}

TEST_CASE("group composition through 3x3 rotations") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const EulerAngles o1 = random_angles(rng), o2 = random_angles(rng);
        const EulerAngles o3 = zxz_angles(mat_mul(rotation_matrix_zxz(o1), rotation_matrix_zxz(o2)));
        for (int tk = 0; tk <= 6; ++tk) {
            const HalfInt k = HalfInt::from_twice(tk);
            const auto m1 = dmatrix(k, o1), m2 = dmatrix(k, o2), m3 = dmatrix(k, o3);
            const int n = tk + 1;
            // SU(2): the product of two D matrices equals D of the composed
            // rotation up to the sign of the double cover.
            double diff_p = 0.0, diff_m = 0.0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    cnum s = 0.0;
                    for (int i = 0; i < n; ++i) s += m1[a][i] * m2[i][b];
                    diff_p = std::max(diff_p, std::abs(s - m3[a][b]));
                    diff_m = std::max(diff_m, std::abs(s + m3[a][b]));
                }
            if (k.is_integer()) REQUIRE(diff_p < 1e-10);
            else REQUIRE(std::min(diff_p, diff_m) < 1e-10);
        }
    }
}

TEST_CASE("hypergeometric form equals the p-sum") {
    std::mt19937 rng(14);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int tk = trial % 10;
        const HalfInt k = HalfInt::from_twice(tk);
        const HalfInt q = HalfInt::from_twice(-tk + 2 * static_cast<int>(rng() % (tk + 1)));
        const HalfInt qp = HalfInt::from_twice(-tk + 2 * static_cast<int>(rng() % (tk + 1)));
        const EulerAngles o = random_angles(rng);
        worst = std::max(worst, std::abs(wigner_d(k, q, qp, o) - wigner_d_hyp(k, q, qp, o)));
    }
    CHECK(worst < 1e-11);
    // Near Theta = pi the Pfaff branch is used.
    for (double t : {pi, pi - 1e-7, pi - 1e-4})
        CHECK(std::abs(wigner_d(k52, qm12, q32, {0.2, t, 0.3}) - wigner_d_hyp(k52, qm12, q32, {0.2, t, 0.3})) < 1e-11);
}

TEST_CASE("2 pi shift in Theta") {
    std::mt19937 rng(15);
    for (int tk = 0; tk <= 8; ++tk) {
        const HalfInt k = HalfInt::from_twice(tk);
        EulerAngles o = random_angles(rng), s = o;
        s.theta += two_pi;
        const double sign = (tk % 2) ? -1.0 : 1.0;
        for (HalfInt q = -k; q <= k; q += 1)
            REQUIRE(std::abs(wigner_d(k, q, -k, s) - sign * wigner_d(k, q, -k, o)) < 1e-12);
    }
}
