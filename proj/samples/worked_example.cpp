// SPDX-License-Identifier: MIT
//
// Evaluates D^{5/2}_{-1/2,3/2} for the point pair x1 = (pi/6, pi/4),
// x2 = (pi/3, pi) on every branch that carries x1 to x2.

#include <cstdio>

#include "rcgc/rcgc.hpp"

int main() {
    using namespace rcgc;
    const HalfInt k = HalfInt::parse("5/2"), q = HalfInt::parse("-1/2"), qp = HalfInt::parse("3/2");
    const SpherePoint x1{pi / 6, pi / 4}, x2{pi / 3, pi};
    for (const auto& g : euler_from_points(x1, x2)) {
        const cnum d = wigner_d(k, q, qp, g.omega);
        std::printf("%-5s Omega = (%.6f, %.6f, %.6f)  D = %.12f %+.12fi\n", branch_name(g.branch.label), g.omega.phi,
                    g.omega.theta, g.omega.psi, d.real(), d.imag());
    }
    const cnum e = eta(k, q, qp, x1, x2);
    std::printf("eta   %.12f %+.12fi\n", e.real(), e.imag());
    std::printf("S^0_00(x1) = %.12f\n", S_integral(0, 0, 0, x1).real());
}
