// SPDX-License-Identifier: MIT
//
// Euler angles of the rotations that carry the unit vector with spherical
// coordinates x1 (fixed frame) into x2 (rotated frame).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "halfint.hpp"
#include "wigner.hpp"

namespace rcgc {

/// Spherical coordinates of a unit vector; theta in [0, pi], phi in [0, 2 pi).
struct SpherePoint {
    double theta = 0.0, phi = 0.0;
};

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

enum class Branch { O11p, O12p, O11m, O12m, O2p, O2m };

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::O11p: return "O11p";
        case Branch::O12p: return "O12p";
        case Branch::O11m: return "O11m";
        case Branch::O12m: return "O12m";
        case Branch::O2p: return "O2p";
        case Branch::O2m: return "O2m";
    }
    return "?";
}

/// Parameters of Phi = phi2 + alpha pi/2, Theta = beta (theta1 - gamma
/// theta2) + 2 pi n, Psi = -phi1 + delta pi/2 + 2 pi n'. phi_winding is the
/// number of turns removed from Phi to bring it into [0, 2 pi).
struct BranchSpec {
    int n = 0;
    int n_prime = 0;
    int alpha = 1, beta = 1, gamma = 1, delta = 1;
    Branch label = Branch::O11p;
    int phi_winding = 0;
};

struct GeometrySolution {
    BranchSpec branch;
    EulerAngles omega;
    bool applicable = true;
};

namespace detail {

inline double wrap_2pi(double x) {
    double r = std::fmod(x, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r -= two_pi;
    return r;
}

inline void require_sphere_point(const SpherePoint& x, const char* what) {
    if (!(x.theta >= 0.0 && x.theta <= pi) || !std::isfinite(x.phi))
        throw domain_error(std::string(what) + ": theta must lie in [0, pi]");
}

inline int floor_turns(double x) { return static_cast<int>(std::floor(x / two_pi)); }

}  // namespace detail

/// Point with phi reduced into [0, 2 pi); throws for theta outside [0, pi].
inline SpherePoint normalized(SpherePoint x) {
    detail::require_sphere_point(x, "SpherePoint");
    x.phi = detail::wrap_2pi(x.phi);
    return x;
}

inline Vec3 unit_vector(const SpherePoint& x) {
    const double s = std::sin(x.theta);
    return {s * std::cos(x.phi), s * std::sin(x.phi), std::cos(x.theta)};
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) r[i][j] += a[i][l] * b[l][j];
    return r;
}

inline Vec3 mat_vec(const Mat3& a, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += a[i][j] * v[j];
    return r;
}

/// R = R_z(Phi) R_x(Theta) R_z(Psi), active rotations.
inline Mat3 rotation_matrix_zxz(const EulerAngles& o) {
    const double c1 = std::cos(o.phi), s1 = std::sin(o.phi);
    const double c2 = std::cos(o.theta), s2 = std::sin(o.theta);
    const double c3 = std::cos(o.psi), s3 = std::sin(o.psi);
    return {{{c1 * c3 - s1 * c2 * s3, -c1 * s3 - s1 * c2 * c3, s1 * s2},
             {s1 * c3 + c1 * c2 * s3, -s1 * s3 + c1 * c2 * c3, -c1 * s2},
             {s2 * s3, s2 * c3, c2}}};
}

/// Parameter row of a branch before winding normalization.
///
/// The Omega_11 and Omega_12 rows use the sign pattern that actually solves
/// R(Omega) r1 = r2: Theta = theta2 - theta1 for Omega_11, theta1 - theta2
/// for Omega_12, on both sides of theta1 = theta2.
inline BranchSpec table_row(Branch b) {
    BranchSpec s;
    s.label = b;
    switch (b) {
        case Branch::O11p:
        case Branch::O11m: s.alpha = +1; s.beta = -1; s.gamma = +1; s.delta = -1; s.n = 0; break;
        case Branch::O12p:
        case Branch::O12m: s.alpha = -1; s.beta = +1; s.gamma = +1; s.delta = +1; s.n = 0; break;
        case Branch::O2p: s.alpha = +1; s.beta = +1; s.gamma = -1; s.delta = +1; s.n = 0; break;
        case Branch::O2m: s.alpha = -1; s.beta = -1; s.gamma = -1; s.delta = -1; s.n = 1; break;
    }
    return s;
}

/// Euler angles of a parameter row at (x1, x2) with Phi and Psi reduced into
/// [0, 2 pi); the windings used are stored back into the spec.
inline EulerAngles branch_angles(BranchSpec& s, const SpherePoint& x1, const SpherePoint& x2) {
    EulerAngles o;
    const double phi_formal = x2.phi + s.alpha * 0.5 * pi;
    s.phi_winding = detail::floor_turns(phi_formal);
    o.phi = phi_formal - two_pi * s.phi_winding;
    if (o.phi < 0.0) o.phi = 0.0;
    o.theta = s.beta * (x1.theta - s.gamma * x2.theta) + two_pi * s.n;
    const double psi0 = -x1.phi + s.delta * 0.5 * pi;
    s.n_prime = -detail::floor_turns(psi0);
    o.psi = psi0 + two_pi * s.n_prime;
    if (o.psi >= two_pi) o.psi -= two_pi;
    if (o.psi < 0.0) o.psi = 0.0;
    return o;
}

/// All branches whose domain condition holds for (x1, x2), in the order
/// O11p/O12p, O11m/O12m, O2p, O2m.
inline std::vector<GeometrySolution> euler_from_points(SpherePoint x1, SpherePoint x2) {
    x1 = normalized(x1);
    x2 = normalized(x2);
    if (x1.theta == 0.0 && x2.theta == 0.0)
        throw degenerate_rotation_error(
            "euler_from_points: theta1 = theta2 = 0; R(Omega) = R_z(Phi + Psi) and only the total angle "
            "Phi + Psi about the z axis is defined");
    std::vector<GeometrySolution> out;
    auto push = [&](Branch b) {
        GeometrySolution g;
        g.branch = table_row(b);
        g.omega = branch_angles(g.branch, x1, x2);
        out.push_back(g);
    };
    const bool first_half = x2.phi <= pi;
    if (x1.theta >= x2.theta) push(first_half ? Branch::O11p : Branch::O12p);
    if (x2.theta >= x1.theta) push(first_half ? Branch::O11m : Branch::O12m);
    const double sum = x1.theta + x2.theta;
    if (sum > 0.0 && sum <= pi) push(Branch::O2p);
    if (sum >= pi) push(Branch::O2m);
    return out;
}

/// Largest component of |R(Omega) r1 - r2|.
inline double rotation_residual(const EulerAngles& o, const SpherePoint& x1, const SpherePoint& x2) {
    const Vec3 r = mat_vec(rotation_matrix_zxz(o), unit_vector(x1));
    const Vec3 t = unit_vector(x2);
    double m = 0.0;
    for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(r[i] - t[i]));
    return m;
}

struct OptimalPsi {
    std::vector<double> values;  // distinct solutions in [0, 2 pi), ascending
    bool any = false;            // sin(theta1) = 0: every Psi is admissible
};

/// Solutions of sin(theta1) cos(phi1 + Psi) = 0.
inline OptimalPsi optimal_psi(SpherePoint x1) {
    x1 = normalized(x1);
    OptimalPsi r;
    r.any = std::sin(x1.theta) == 0.0 || x1.theta == pi;
    r.values = {detail::wrap_2pi(-x1.phi + 0.5 * pi), detail::wrap_2pi(-x1.phi + 1.5 * pi)};
    std::sort(r.values.begin(), r.values.end());
    return r;
}

struct ThetaCandidate {
    int sigma1 = 1, sigma2 = 1;
    double value = 0.0;
    bool admissible = false;
};

struct PhiCandidate {
    int family = 1;  // 1: from the (x2, z2) subsystem, 2: from (y2, z2)
    int sigma3 = 1, sigma4 = 1;
    double value = 0.0;
    bool admissible = false;
};

struct PartialSolutions {
    std::vector<ThetaCandidate> theta;
    std::vector<PhiCandidate> phi;
    std::vector<double> common_phi;  // values shared by both families
    double x1p = 0.0, y1p = 0.0;     // x1', y1' after the Psi rotation
};

/// Candidate polar angles theta and azimuths phi (rotation Phi = phi + pi/2)
/// solving the component equations for a given Psi, all sign choices, zero
/// winding.
inline PartialSolutions partial_solutions(SpherePoint x1, SpherePoint x2, double psi) {
    x1 = normalized(x1);
    x2 = normalized(x2);
    const Vec3 r1 = unit_vector(x1), r2 = unit_vector(x2);
    const double x1p = r1[0] * std::cos(psi) - r1[1] * std::sin(psi);
    const double y1p = r1[0] * std::sin(psi) + r1[1] * std::cos(psi);
    const double z1 = r1[2], x2c = r2[0], y2c = r2[1], z2 = r2[2];
    PartialSolutions out;
    out.x1p = x1p;
    out.y1p = y1p;

    const double den = z1 * z1 + y1p * y1p;
    const double disc = z1 * z1 - z2 * z2 + y1p * y1p;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            ThetaCandidate c;
            c.sigma1 = s1;
            c.sigma2 = s2;
            if (den > 0.0 && disc >= -1e-15) {
                double arg = (z1 * z2 + s2 * std::abs(y1p) * std::sqrt(std::max(disc, 0.0))) / den;
                if (arg >= -1.0 - 1e-12 && arg <= 1.0 + 1e-12) {
                    c.value = s1 * std::acos(std::clamp(arg, -1.0, 1.0));
                    c.admissible = true;
                }
            }
            out.theta.push_back(c);
        }

    const double rho2 = 1.0 - z2 * z2;
    const double root2 = 1.0 - x1p * x1p - z2 * z2;
    const double sgn_y = (y1p >= 0.0) ? 1.0 : -1.0;
    for (int fam : {1, 2})
        for (int s3 : {1, -1})
            for (int s4 : {1, -1}) {
                PhiCandidate c;
                c.family = fam;
                c.sigma3 = s3;
                c.sigma4 = s4;
                if (rho2 > 1e-15 && root2 >= -1e-13) {
                    const double rt = std::sqrt(std::max(root2, 0.0));
                    double arg = (fam == 1) ? (x1p * y2c + s4 * std::abs(x2c) * rt) / rho2
                                            : (x2c * rt + s4 * std::abs(x1p * y2c)) / (sgn_y * rho2);
                    if (arg >= -1.0 - 1e-12 && arg <= 1.0 + 1e-12) {
                        c.value = s3 * std::acos(std::clamp(arg, -1.0, 1.0));
                        c.admissible = true;
                    }
                }
                out.phi.push_back(c);
            }

    for (const auto& a : out.phi) {
        if (!a.admissible || a.family != 1) continue;
        for (const auto& b : out.phi) {
            if (!b.admissible || b.family != 2) continue;
            if (std::abs(a.value - b.value) < 1e-9) {
                bool seen = false;
                for (double v : out.common_phi) seen = seen || std::abs(v - a.value) < 1e-9;
                if (!seen) out.common_phi.push_back(a.value);
            }
        }
    }
    return out;
}

struct XValue {
    double value = 0.0;
    bool admissible = false;
};

/// sin^2(theta/2) of a partial solution:
/// (z1^2 - z1 z2 + y1'^2 + sigma2 y1' sqrt(z1^2 - z2^2 + y1'^2)) / (2 (z1^2 + y1'^2)).
inline XValue x_function(SpherePoint x1, SpherePoint x2, double psi, int sigma2) {
    x1 = normalized(x1);
    x2 = normalized(x2);
    const Vec3 r1 = unit_vector(x1), r2 = unit_vector(x2);
    const double y1p = r1[0] * std::sin(psi) + r1[1] * std::cos(psi);
    const double z1 = r1[2], z2 = r2[2];
    const double den = z1 * z1 + y1p * y1p;
    const double disc = z1 * z1 - z2 * z2 + y1p * y1p;
    XValue x;
    if (den <= 0.0 || disc < -1e-15) return x;
    x.value = (z1 * z1 - z1 * z2 + y1p * y1p + sigma2 * y1p * std::sqrt(std::max(disc, 0.0))) / (2.0 * den);
    x.admissible = true;
    return x;
}

}  // namespace rcgc
