// SPDX-License-Identifier: MIT
//
// Generalized spherical functions D^k_{qq'}(Phi, Theta, Psi) on SO(3)/SU(2),
// by the explicit p-sum and by a single hypergeometric function.

#pragma once

#include <algorithm>
#include <cmath>

#include "halfint.hpp"
#include "special.hpp"

namespace rcgc {

/// Euler angles in the ZXZ convention, radians.
struct EulerAngles {
    double phi = 0.0, theta = 0.0, psi = 0.0;
};

/// One matrix element D^k_{qq'} together with its indices.
struct DElement {
    HalfInt k, q, qp;
    cnum value;
};

namespace detail {

inline void require_indices(HalfInt k, HalfInt q, HalfInt qp, const char* what) {
    require_compatible(k, q, what);
    require_compatible(k, qp, what);
}

inline double ipow_real(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// cos(t/2)^{2k} sum_p b_p tan(t/2)^{2p+q'-q}, written with non-negative
// powers of cos and sin so that t = pi needs no special case.
inline double half_angle_sum(int tk, int tq, int tqp, double t);

// Theta reduced into [0, 2 pi); returns the sign (-1)^{2k n} picked up.
inline double reduce_theta(int tk, double& theta) {
    double n = std::floor(theta / two_pi);
    if (n == 0.0) return 1.0;
    theta -= n * two_pi;
    if (theta >= two_pi) theta -= two_pi;
    if (theta < 0.0) theta = 0.0;
    bool odd = std::fmod(std::abs(n), 2.0) == 1.0;
    return (odd && (tk % 2 != 0)) ? -1.0 : 1.0;
}

}  // namespace detail

/// a(k,q,q') = i^{q'-q} sqrt((k+q)!(k-q)!(k+q')!(k-q')!).
inline cnum a_coeff(HalfInt k, HalfInt q, HalfInt qp) {
    detail::require_indices(k, q, qp, "a_coeff");
    double l = factorial_ln((k + q).value()) + factorial_ln((k - q).value()) + factorial_ln((k + qp).value()) +
               factorial_ln((k - qp).value());
    return ipow(qp - q) * std::exp(0.5 * l);
}

/// b_p(k,q,q') = (-1)^p / [p! (p+q'-q)! (k+q-p)! (k-q'-p)!], zero when any
/// factorial argument is negative.
inline double b_coeff(HalfInt k, HalfInt q, HalfInt qp, int p) {
    detail::require_indices(k, q, qp, "b_coeff");
    const int f1 = p, f2 = p + (qp - q).as_int(), f3 = (k + q).as_int() - p, f4 = (k - qp).as_int() - p;
    if (f1 < 0 || f2 < 0 || f3 < 0 || f4 < 0) return 0.0;
    double v = 1.0 / (factorial(f1) * factorial(f2) * factorial(f3) * factorial(f4));
    return (p % 2) ? -v : v;
}

/// Range of p with non-zero b_p: max(0, q-q') .. min(k+q, k-q').
inline std::pair<int, int> p_range(HalfInt k, HalfInt q, HalfInt qp) {
    int lo = std::max(0, (q - qp).as_int());
    int hi = std::min((k + q).as_int(), (k - qp).as_int());
    return {lo, hi};
}

namespace detail {

inline double half_angle_sum(int tk, int tq, int tqp, double t) {
    const HalfInt k = HalfInt::from_twice(tk), q = HalfInt::from_twice(tq), qp = HalfInt::from_twice(tqp);
    const double c = std::cos(0.5 * t), s = std::sin(0.5 * t);
    auto [lo, hi] = p_range(k, q, qp);
    double sum = 0.0;
    for (int p = lo; p <= hi; ++p) {
        const int e = 2 * p + (tqp - tq) / 2;
        sum += b_coeff(k, q, qp, p) * ipow_real(c, tk - e) * ipow_real(s, e);
    }
    return sum;
}

}  // namespace detail

/// D^k_{qq'}(Phi, Theta, Psi) = a e^{i(q Phi + q' Psi)} sum_p b_p
/// cos^{2k-e}(Theta/2) sin^e(Theta/2), e = 2p - q + q'. Any real angles;
/// Theta is reduced with D(Phi, Theta + 2 pi, Psi) = (-1)^{2k} D.
inline cnum wigner_d(HalfInt k, HalfInt q, HalfInt qp, const EulerAngles& omega) {
    detail::require_indices(k, q, qp, "wigner_d");
    double theta = omega.theta;
    const double sgn = detail::reduce_theta(k.twice(), theta);
    const double d = detail::half_angle_sum(k.twice(), q.twice(), qp.twice(), theta);
    const cnum phase = std::polar(1.0, q.value() * omega.phi + qp.value() * omega.psi);
    return sgn * d * a_coeff(k, q, qp) * phase;
}

namespace detail {

// A^>_{qq'} for q >= q' as a function of the half angle, without the
// Euler phase factor.
inline cnum hyp_block(HalfInt k, HalfInt q, HalfInt qp, double half) {
    const int d = (q - qp).as_int();
    const double lr = factorial_ln((k + q).value()) + factorial_ln((k - qp).value()) -
                      factorial_ln((k + qp).value()) - factorial_ln((k - q).value());
    const double pref = std::exp(0.5 * lr) / factorial(d);
    const double a = k.value() + 1.0 + q.value(), b = k.value() + 1.0 - qp.value(), c = 1.0 + d;
    const double cs = std::cos(half), sn = std::sin(half);
    double body;
    if (cs * cs >= 0.5) {
        const double t = sn / cs;
        body = std::pow(t, d) * std::pow(cs, -2 - k.twice()) * gauss_2f1(a, b, c, -t * t);
    } else {
        // Past Theta = pi/2 the argument -tan^2 is large and the block is
        // small, so use the Pfaff form in w = sin^2, a terminating
        // polynomial, choosing the variant with a non-negative power of cos.
        const double w = sn * sn;
        const int e = (q + qp).as_int();
        if (e >= 0)
            body = std::pow(sn, d) * std::pow(cs, e) * series_2f1(a, c - b, c, w);
        else
            body = std::pow(sn, d) * std::pow(cs, -e) * series_2f1(c - a, b, c, w);
    }
    return ipow(q - qp) * (pref * body);
}

}  // namespace detail

/// D^k_{qq'} through one Gauss hypergeometric function. For q >= q' the
/// block is i^{q-q'}/(q-q')! sqrt((k+q)!(k-q')!/((k+q')!(k-q)!))
/// tan^{q-q'} cos^{-2-2k} 2F1(k+1+q, k+1-q'; 1+q-q'; -tan^2) at half the
/// polar angle; for q < q' the indices of the block are swapped.
inline cnum wigner_d_hyp(HalfInt k, HalfInt q, HalfInt qp, const EulerAngles& omega) {
    detail::require_indices(k, q, qp, "wigner_d_hyp");
    double theta = omega.theta;
    const double sgn = detail::reduce_theta(k.twice(), theta);
    const cnum block = (q >= qp) ? detail::hyp_block(k, q, qp, 0.5 * theta) : detail::hyp_block(k, qp, q, 0.5 * theta);
    const cnum phase = std::polar(1.0, q.value() * omega.phi + qp.value() * omega.psi);
    return sgn * block * phase;
}

}  // namespace rcgc
