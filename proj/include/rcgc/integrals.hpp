// SPDX-License-Identifier: MIT
//
// Closed-form integrals of the spherical functions over the second sphere.

#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "sphfun.hpp"
#include "special.hpp"
#include "wigner.hpp"

namespace rcgc {

/// Divergent improper integral (a Beta argument would be non-positive).
struct divergence_error : domain_error {
    using domain_error::domain_error;
};

struct PIKernel {
    HalfInt k, q, qp;
    int p = 0;
    double theta1 = 0.0;
    double a = 0.0, b = pi;
    int gamma = +1;
};

namespace detail {

// int_0^x u^m / (1 + u^2)^B du for 0 <= x <= 1.
inline double power_antiderivative(int m, double B, double x) {
    if (x == 0.0) return 0.0;
    const double e = m + 1.0;
    return std::pow(x, e) / e * gauss_2f1(0.5 * e, B, 0.5 * e + 1.0, -x * x);
}

}  // namespace detail

/// I_s(z) = int_0^z t^n / (1 + t^2)^{k+2} dt with n = 2p + q' - q + s,
/// z^{n+1}/(n+1) 2F1((n+1)/2, k+2; (n+3)/2; -z^2). Infinite z gives the
/// Beta limit (+-1)^{n+1} B((n+1)/2, k+2-(n+1)/2) / 2.
inline double I_s_antiderivative(int s, int p, HalfInt k, HalfInt q, HalfInt qp, double z) {
    detail::require_indices(k, q, qp, "I_s_antiderivative");
    if (s < 0 || s > 2) throw domain_error("I_s_antiderivative: s must be 0, 1 or 2");
    const int n = 2 * p + (qp - q).as_int() + s;
    if (n + 1 <= 0)
        throw domain_error("I_s_antiderivative: exponent n + 1 = " + std::to_string(n + 1) +
                           " has a logarithmic antiderivative");
    const double B = k.value() + 2.0;
    const double sgn = (z < 0.0 && (n + 1) % 2 != 0) ? -1.0 : 1.0;
    const double az = std::abs(z);
    const bool convergent = (n + 1) < 2.0 * B;
    auto limit = [&]() {
        if (!convergent)
            throw divergence_error("I_s_antiderivative: integral to infinity diverges for n = " + std::to_string(n) +
                                   ", k = " + k.str());
        return 0.5 * beta(0.5 * (n + 1), B - 0.5 * (n + 1));
    };
    if (std::isinf(az)) return sgn * limit();
    if (az <= 1.0 || !convergent) {
        const double e = n + 1.0;
        return sgn * std::pow(az, e) / e * gauss_2f1(0.5 * e, B, 0.5 * e + 1.0, -az * az);
    }
    // Tail int_z^inf t^n/(1+t^2)^B dt = int_0^{1/z} u^{2k+2-n}/(1+u^2)^B du.
    const int m = k.twice() + 2 - n;
    return sgn * (limit() - detail::power_antiderivative(m, B, 1.0 / az));
}

/// pI(theta1; gamma; a, b) = int_a^b sin t cos^{2k}(h) tan^{2p+q'-q}(h) dt,
/// h = (theta1 - gamma t)/2. For gamma = +1:
/// 2 {2 I_1 cos theta1 + (I_2 - I_0) sin theta1}, I_s = I_s(z_b) - I_s(z_a),
/// z_x = tan((theta1 - x)/2).
inline double pI(const PIKernel& kr) {
    detail::require_indices(kr.k, kr.q, kr.qp, "pI");
    if (kr.gamma != 1 && kr.gamma != -1) throw domain_error("pI: gamma must be +1 or -1");
    if (kr.a == kr.b) return 0.0;
    if (kr.gamma == -1)
        throw domain_error("pI: gamma = -1 is not integrable over the sphere; only point evaluations are defined");
    auto endpoint = [&](double x) {
        const double d = kr.theta1 - x;
        if (std::abs(d - pi) <= 4e-16) return std::numeric_limits<double>::infinity();
        if (std::abs(d + pi) <= 4e-16) return -std::numeric_limits<double>::infinity();
        return std::tan(0.5 * d);
    };
    const double za = endpoint(kr.a), zb = endpoint(kr.b);
    double I[3];
    for (int s = 0; s < 3; ++s)
        I[s] = I_s_antiderivative(s, kr.p, kr.k, kr.q, kr.qp, zb) - I_s_antiderivative(s, kr.p, kr.k, kr.q, kr.qp, za);
    return 2.0 * (2.0 * I[1] * std::cos(kr.theta1) + (I[2] - I[0]) * std::sin(kr.theta1));
}

/// Beta boundary forms on (0, pi): theta1 = 0 gives 4 I_1(-inf) with
/// I_1(-inf) = (-1)^{q'-q}/2 B(k+1-p+(q-q')/2, 1+p+(q'-q)/2); theta1 = pi
/// gives (-1)^{q-q'} times the theta1 = 0 value.
inline double pI_boundary(HalfInt k, HalfInt q, HalfInt qp, int p, bool at_pi) {
    detail::require_indices(k, q, qp, "pI_boundary");
    const int d = (qp - q).as_int();
    const double x = k.value() + 1.0 - p - 0.5 * d, y = 1.0 + p + 0.5 * d;
    if (!(x > 0.0) || !(y > 0.0))
        throw divergence_error("pI_boundary: non-positive Beta argument");
    const double v0 = 4.0 * sign_pow(d) * 0.5 * beta(x, y);
    return at_pi ? sign_pow(d) * v0 : v0;
}

/// lambda_{q'}(phi1): (-1)^{q'} on [0, pi/2], (-1)^{2q'} on (pi/2, 3pi/2],
/// (-1)^{3q'} on (3pi/2, 2pi).
inline cnum lambda_phase(HalfInt qp, double phi1) {
    int j = 3;
    if (phi1 <= 0.5 * pi) j = 1;
    else if (phi1 <= 1.5 * pi) j = 2;
    return m1pow(HalfInt::from_twice(j * qp.twice()));
}

namespace detail {

inline double pI_sum(HalfInt k, HalfInt q, HalfInt qp, double theta1, double a, double b) {
    auto [lo, hi] = p_range(k, q, qp);
    double s = 0.0;
    for (int p = lo; p <= hi; ++p) s += b_coeff(k, q, qp, p) * pI({k, q, qp, p, theta1, a, b, 1});
    return s;
}

}  // namespace detail

/// S^k_{qq'}(x1; +): the integral over x2 of the spherical functions of the
/// four Omega_1 areas, in closed form
///   lambda_{q'}(phi1) i^{q-q'-1} ((-1)^q - 1)/q ((-1)^{q'} + 1) a(k,q,q')
///   e^{-i q' phi1} sum_p b_p [pI(theta1; +; 0, theta1)
///                             + (-1)^{q-q'} pI(theta1; +; theta1, pi)].
/// For integer k and q = 0 the limit pi i^{-q'} ((-1)^{q'} + 1) a(k,0,q')
/// e^{-i q' phi1} sum_p b_p pI(theta1; +; 0, pi) is used. Cases where a
/// prefactor vanishes identically return an exact zero.
inline cnum S_integral(HalfInt k, HalfInt q, HalfInt qp, SpherePoint x1) {
    detail::require_indices(k, q, qp, "S_integral");
    x1 = normalized(x1);
    if (k.is_integer()) {
        if (qp.as_int() % 2 != 0) return 0.0;
        if (q.as_int() != 0 && q.as_int() % 2 == 0) return 0.0;
        if (q.as_int() == 0) {
            const cnum pref = pi * ipow(-qp) * 2.0 * a_coeff(k, 0, qp) * std::polar(1.0, -qp.value() * x1.phi);
            return pref * detail::pI_sum(k, q, qp, x1.theta, 0.0, pi);
        }
    }
    const cnum fq = (m1pow(q) - 1.0) / q.value();
    const cnum fqp = m1pow(qp) + 1.0;
    const cnum pref = lambda_phase(qp, x1.phi) * ipow(q - qp - 1) * fq * fqp * a_coeff(k, q, qp) *
                      std::polar(1.0, -qp.value() * x1.phi);
    const double mirror = sign_pow((q - qp).as_int());
    auto [lo, hi] = p_range(k, q, qp);
    double s = 0.0;
    for (int p = lo; p <= hi; ++p) {
        const double lower = pI({k, q, qp, p, x1.theta, 0.0, x1.theta, 1});
        const double upper = pI({k, q, qp, p, x1.theta, x1.theta, pi, 1});
        s += b_coeff(k, q, qp, p) * (lower + mirror * upper);
    }
    return pref * s;
}

/// int over x2 of eta^k_{qq'}(x1, x2) for integer k:
/// 2 pi delta_{q0} (-1)^{q'} a(k,0,q') e^{-i q'(phi1 + pi/2)}
/// sum_p b_p pI(theta1; +; 0, pi).
inline cnum eta_sphere_integral(HalfInt k, HalfInt q, HalfInt qp, SpherePoint x1) {
    detail::require_indices(k, q, qp, "eta_sphere_integral");
    if (!k.is_integer()) throw domain_error("eta_sphere_integral: integer rank required");
    x1 = normalized(x1);
    if (q.as_int() != 0) return 0.0;
    const cnum pref = two_pi * sign_pow(qp.as_int()) * a_coeff(k, 0, qp) *
                      std::polar(1.0, -qp.value() * (x1.phi + 0.5 * pi));
    return pref * detail::pI_sum(k, q, qp, x1.theta, 0.0, pi);
}

/// int_0^pi sin^{2k+1} t cos^g t dt = [1 + (-1)^g] B(k+1, (g+1)/2) / 2.
inline double pinchon_check(HalfInt k, int gamma_exp) {
    if (k.twice() + 2 <= 0) throw domain_error("pinchon_check: 2k + 1 must be non-negative");
    if (gamma_exp < 0) throw domain_error("pinchon_check: exponent must be non-negative");
    if (gamma_exp % 2 != 0) return 0.0;
    return beta(k.value() + 1.0, 0.5 * (gamma_exp + 1));
}

}  // namespace rcgc
