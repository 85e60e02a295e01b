// SPDX-License-Identifier: MIT
//
// Spherical functions on S^2 x S^2: the Wigner D function with its Euler
// angles expressed through the coordinates of x1 and x2.

#pragma once

#include <map>
#include <vector>

#include "cgc.hpp"
#include "geometry.hpp"
#include "wigner.hpp"

namespace rcgc {

enum class Family { xi_p, xi_m, theta_p, theta_m, zeta_p, zeta_m, eta };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::xi_p: return "xi_p";
        case Family::xi_m: return "xi_m";
        case Family::theta_p: return "theta_p";
        case Family::theta_m: return "theta_m";
        case Family::zeta_p: return "zeta_p";
        case Family::zeta_m: return "zeta_m";
        case Family::eta: return "eta";
    }
    return "?";
}

struct SphFunSpec {
    BranchSpec branch;
    HalfInt k, q, qp;
};

/// i^{alpha q + delta q'} (-1)^{2(n k + n' q')} beta^{q'-q} a(k,q,q')
/// e^{i(q phi2 - q' phi1)} cos^{2k}(h) sum_p b_p tan^{2p+q'-q}(h),
/// h = (theta1 - gamma theta2)/2, evaluated with non-negative powers of
/// cos h and sin h.
inline cnum sphfun_general(const SphFunSpec& s, SpherePoint x1, SpherePoint x2) {
    const HalfInt k = s.k, q = s.q, qp = s.qp;
    detail::require_indices(k, q, qp, "sphfun_general");
    x1 = normalized(x1);
    x2 = normalized(x2);
    const BranchSpec& b = s.branch;
    const double h = 0.5 * (x1.theta - b.gamma * x2.theta);
    const double d = detail::half_angle_sum(k.twice(), q.twice(), qp.twice(), 2.0 * h);
    const int qq = (qp - q).as_int();
    const double beta_pow = (b.beta < 0 && (qq % 2 != 0)) ? -1.0 : 1.0;
    const double nk_sign = sign_pow(b.n * k.twice());
    cnum phase = ipow(HalfInt::from_twice(b.alpha * q.twice() + b.delta * qp.twice()));
    phase *= m1pow(HalfInt::from_twice(2 * b.n_prime * qp.twice()));
    phase *= std::polar(1.0, q.value() * x2.phi - qp.value() * x1.phi);
    return (beta_pow * nk_sign * d) * a_coeff(k, q, qp) * phase;
}

/// Parameter tuple (n; alpha, beta, gamma, delta) of a named family.
inline BranchSpec family_tuple(Family f) {
    BranchSpec s;
    switch (f) {
        case Family::xi_p: s.alpha = 1; s.beta = 1; s.gamma = 1; s.delta = -1; s.n = 0; s.label = Branch::O11p; break;
        case Family::xi_m: s.alpha = 1; s.beta = -1; s.gamma = 1; s.delta = -1; s.n = 0; s.label = Branch::O11m; break;
        case Family::theta_p: s.alpha = -1; s.beta = 1; s.gamma = 1; s.delta = 1; s.n = 0; s.label = Branch::O12p; break;
        case Family::theta_m: s.alpha = -1; s.beta = -1; s.gamma = 1; s.delta = 1; s.n = 0; s.label = Branch::O12m; break;
        case Family::zeta_p: s.alpha = 1; s.beta = 1; s.gamma = -1; s.delta = 1; s.n = 0; s.label = Branch::O2p; break;
        case Family::zeta_m: s.alpha = -1; s.beta = -1; s.gamma = -1; s.delta = -1; s.n = 1; s.label = Branch::O2m; break;
        case Family::eta: throw domain_error("family_tuple: eta has no fixed tuple; it follows the geometry");
    }
    return s;
}

/// Value of a branch at its own normalized Euler angles: the windings that
/// bring Phi and Psi into [0, 2 pi) are folded into n and n'.
inline cnum sphfun_branch(BranchSpec spec, HalfInt k, HalfInt q, HalfInt qp, SpherePoint x1, SpherePoint x2) {
    x1 = normalized(x1);
    x2 = normalized(x2);
    branch_angles(spec, x1, x2);
    spec.n += spec.phi_winding;
    return sphfun_general({spec, k, q, qp}, x1, x2);
}

/// The Omega_1 solution used for eta: Omega_11 when phi2 is in [0, pi],
/// Omega_12 otherwise.
inline GeometrySolution eta_solution(SpherePoint x1, SpherePoint x2) {
    for (const auto& g : euler_from_points(x1, x2))
        if (g.branch.label == Branch::O11p || g.branch.label == Branch::O11m || g.branch.label == Branch::O12p ||
            g.branch.label == Branch::O12m)
            return g;
    throw domain_error("eta_solution: no Omega_1 branch");
}

/// eta^k_{qq'}(x1, x2): D^k_{qq'} of the Omega_1 rotation carrying x1 to x2.
inline cnum eta(HalfInt k, HalfInt q, HalfInt qp, SpherePoint x1, SpherePoint x2) {
    return sphfun_branch(eta_solution(x1, x2).branch, k, q, qp, x1, x2);
}

/// Named family with an explicit n' and no Phi winding (the literal tuple).
inline cnum sphfun_named(Family f, HalfInt k, HalfInt q, HalfInt qp, SpherePoint x1, SpherePoint x2, int n_prime) {
    if (f == Family::eta) return eta(k, q, qp, x1, x2);
    BranchSpec s = family_tuple(f);
    s.n_prime = n_prime;
    if (f == Family::xi_m) {
        s = family_tuple(Family::xi_p);
        s.n_prime = n_prime;
        return sign_pow((qp - q).as_int()) * sphfun_general({s, k, q, qp}, x1, x2);
    }
    return sphfun_general({s, k, q, qp}, x1, x2);
}

/// Named family with the canonical windings, so that the value equals
/// wigner_d at the family's Euler angles reduced into [0, 2 pi).
inline cnum sphfun_named(Family f, HalfInt k, HalfInt q, HalfInt qp, SpherePoint x1, SpherePoint x2) {
    if (f == Family::eta) return eta(k, q, qp, x1, x2);
    if (f == Family::xi_m) {
        BranchSpec s = family_tuple(Family::xi_p);
        return sign_pow((qp - q).as_int()) * sphfun_branch(s, k, q, qp, x1, x2);
    }
    return sphfun_branch(family_tuple(f), k, q, qp, x1, x2);
}

/// Terms tau^k_{q1+q2, q1'+q2'} <k1 q1 k2 q2|k q> <k1 q1' k2 q2'|k q'> of the
/// product tau^{k1}_{q1 q1'} tau^{k2}_{q2 q2'}, keyed by k.
inline std::map<HalfInt, cnum> sphfun_reduce(Family f, HalfInt k1, HalfInt q1, HalfInt q1p, HalfInt k2, HalfInt q2,
                                             HalfInt q2p, SpherePoint x1, SpherePoint x2) {
    detail::require_indices(k1, q1, q1p, "sphfun_reduce");
    detail::require_indices(k2, q2, q2p, "sphfun_reduce");
    std::map<HalfInt, cnum> out;
    const HalfInt q = q1 + q2, qp = q1p + q2p;
    for (HalfInt k = abs(k1 - k2); k <= k1 + k2; k += 1) {
        if (!compatible(k, q) || !compatible(k, qp)) {
            out[k] = 0.0;
            continue;
        }
        const double c = cgc(k1, q1, k2, q2, k, q) * cgc(k1, q1p, k2, q2p, k, qp);
        out[k] = (c == 0.0) ? cnum(0.0) : c * sphfun_named(f, k, q, qp, x1, x2);
    }
    return out;
}

/// T^k_q(K2) = sum_{q'} tau^k_{qq'}(x1, x2) T^k_{q'}(K1); components indexed
/// by q + k.
inline std::vector<cnum> transform_tensor(Family f, HalfInt k, const std::vector<cnum>& comps, SpherePoint x1,
                                          SpherePoint x2) {
    const int dim = k.twice() + 1;
    if (static_cast<int>(comps.size()) != dim)
        throw domain_error("transform_tensor: expected " + std::to_string(dim) + " components");
    std::vector<cnum> out(dim);
    for (int i = 0; i < dim; ++i) {
        const HalfInt q = HalfInt::from_twice(2 * i - k.twice());
        for (int j = 0; j < dim; ++j) {
            const HalfInt qp = HalfInt::from_twice(2 * j - k.twice());
            out[i] += sphfun_named(f, k, q, qp, x1, x2) * comps[j];
        }
    }
    return out;
}

/// C^k_q(x) = i^k D^k_{q0}(phi + pi/2, theta, 0); integer k.
inline cnum c_operator(HalfInt k, HalfInt q, SpherePoint x) {
    (void)k.as_int();
    return ipow(k) * wigner_d(k, q, 0, {x.phi + 0.5 * pi, x.theta, 0.0});
}

/// Y^k_q(x) = sqrt((2k+1)/(4 pi)) C^k_q(x).
inline cnum y_harmonic(HalfInt k, HalfInt q, SpherePoint x) {
    return std::sqrt((k.twice() + 1.0) / (4.0 * pi)) * c_operator(k, q, x);
}

}  // namespace rcgc
