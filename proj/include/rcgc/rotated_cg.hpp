// SPDX-License-Identifier: MIT
//
// Rotated Clebsch-Gordan coefficients, reduced matrix elements and the
// angular part of the two-electron Coulomb matrix element.

#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "cgc.hpp"
#include "integrals.hpp"
#include "oracle.hpp"
#include "sphfun.hpp"

namespace rcgc {

/// c^{l1 l2 l}_{m1 m2 m}(x1, x2) = sum_{m2'} eta^{l2}_{m2 m2'} <l1 m1 l2 m2'|l m>.
inline cnum rcgc1(HalfInt l1, HalfInt l2, HalfInt l, HalfInt m1, HalfInt m2, HalfInt m, SpherePoint x1,
                  SpherePoint x2) {
    require_compatible(l1, m1, "rcgc1");
    require_compatible(l2, m2, "rcgc1");
    require_compatible(l, m, "rcgc1");
    if (!Triangle{l1, l2, l}.couples()) return 0.0;
    const HalfInt m2p = m - m1;
    if (!compatible(l2, m2p)) return 0.0;
    return eta(l2, m2, m2p, x1, x2) * cgc(l1, m1, l2, m2p, l, m);
}

/// C^{l1 l2 l' l}_{m' m}(x1, x2) = sum_{m1 m2} c^{l1 l2 l'}_{m1 m2 m'} <l1 m1 l2 m2|l m>.
inline cnum rcgc2(HalfInt l1, HalfInt l2, HalfInt lp, HalfInt l, HalfInt mp, HalfInt m, SpherePoint x1,
                  SpherePoint x2) {
    require_compatible(lp, mp, "rcgc2");
    require_compatible(l, m, "rcgc2");
    if (!Triangle{l1, l2, lp}.couples() || !Triangle{l1, l2, l}.couples()) return 0.0;
    cnum s = 0.0;
    for (HalfInt m1 = -l1; m1 <= l1; m1 += 1) {
        const HalfInt m2 = m - m1;
        if (!compatible(l2, m2)) continue;
        const double c = cgc(l1, m1, l2, m2, l, m);
        if (c != 0.0) s += rcgc1(l1, l2, lp, m1, m2, mp, x1, x2) * c;
    }
    return s;
}

struct RcgcIArgs {
    HalfInt l1, l2, l, m1, m2, m;
};

/// Terms of c^{l1 l2 l}_{m1 m2 m} c^{lb1 lb2 lb}_{mb1 mb2 mb} keyed by the
/// rank L2 of eta^{L2}_{m2+mb2, m2'+mb2'} obtained from the product of the
/// two eta factors.
inline std::map<HalfInt, cnum> rcgc1_product_reduce(const RcgcIArgs& a, const RcgcIArgs& b, SpherePoint x1,
                                                    SpherePoint x2) {
    require_compatible(a.l2, a.m2, "rcgc1_product_reduce");
    require_compatible(b.l2, b.m2, "rcgc1_product_reduce");
    std::map<HalfInt, cnum> out;
    const HalfInt M2 = a.m2 + b.m2;
    for (HalfInt L2 = abs(a.l2 - b.l2); L2 <= a.l2 + b.l2; L2 += 1) out[L2] = 0.0;
    if (!Triangle{a.l1, a.l2, a.l}.couples() || !Triangle{b.l1, b.l2, b.l}.couples()) return out;
    const HalfInt a2p = a.m - a.m1, b2p = b.m - b.m1;
    if (!compatible(a.l2, a2p) || !compatible(b.l2, b2p)) return out;
    const double outer = cgc(a.l1, a.m1, a.l2, a2p, a.l, a.m) * cgc(b.l1, b.m1, b.l2, b2p, b.l, b.m);
    if (outer == 0.0) return out;
    const HalfInt M2p = a2p + b2p;
    for (auto& [L2, v] : out) {
        if (!compatible(L2, M2) || !compatible(L2, M2p)) continue;
        const double c = cgc(a.l2, a.m2, b.l2, b.m2, L2, M2) * cgc(a.l2, a2p, b.l2, b2p, L2, M2p);
        if (c != 0.0) v = outer * c * eta(L2, M2, M2p, x1, x2);
    }
    return out;
}

/// Basis function values psi_m(0) at the north pole, m indexed from -l.
using PoleValues = std::function<cnum(HalfInt)>;

/// Y^l_m(0) = delta_{m0} i^l sqrt((2l+1)/(4 pi)).
inline cnum y_at_pole(HalfInt l, HalfInt m) {
    if (m != HalfInt(0)) return 0.0;
    return ipow(l) * std::sqrt((l.twice() + 1.0) / (4.0 * pi));
}

/// General form
///   [l||T^k||lbar] = 4 pi/(2l+1) sum_{m' q' mbar'} conj(psi^l_{m'}(0))
///                    T^k_{q'}(0) psi^lbar_{mbar'}(0) <lbar mbar' k q'|l m'>
/// with T_at_origin indexed by q' + k.
inline cnum reduced_matrix_element(HalfInt l, HalfInt k, HalfInt lbar, const std::vector<cnum>& T_at_origin,
                                   const PoleValues& psi_bra, const PoleValues& psi_ket) {
    if (static_cast<int>(T_at_origin.size()) != k.twice() + 1)
        throw domain_error("reduced_matrix_element: expected 2k+1 operator components");
    if (!Triangle{lbar, k, l}.couples()) return 0.0;
    cnum s = 0.0;
    for (HalfInt mp = -l; mp <= l; mp += 1) {
        const cnum bra = std::conj(psi_bra(mp));
        if (bra == 0.0) continue;
        for (HalfInt qp = -k; qp <= k; qp += 1) {
            const HalfInt mb = mp - qp;
            if (!compatible(lbar, mb)) continue;
            const double c = cgc(lbar, mb, k, qp, l, mp);
            if (c != 0.0) s += bra * T_at_origin[(qp + k).as_int()] * psi_ket(mb) * c;
        }
    }
    return 4.0 * pi / (l.twice() + 1.0) * s;
}

/// Spherical-harmonic basis:
///   [l||T^k||lbar] = i^{lbar-l} sqrt((2 lbar+1)/(2l+1)) T^k_0(0) <lbar 0 k 0|l 0>.
inline cnum reduced_matrix_element(HalfInt l, HalfInt k, HalfInt lbar, const std::vector<cnum>& T_at_origin) {
    if (static_cast<int>(T_at_origin.size()) != k.twice() + 1)
        throw domain_error("reduced_matrix_element: expected 2k+1 operator components");
    (void)l.as_int();
    (void)lbar.as_int();
    if (!Triangle{lbar, k, l}.couples()) return 0.0;
    return ipow(lbar - l) * std::sqrt((lbar.twice() + 1.0) / (l.twice() + 1.0)) * T_at_origin[k.as_int()] *
           cgc(lbar, 0, k, 0, l, 0);
}

/// T^k_q(0) components of C^k: i^k delta_{q0}.
inline std::vector<cnum> c_operator_at_pole(HalfInt k) {
    std::vector<cnum> v(k.twice() + 1, 0.0);
    v[k.as_int()] = ipow(k);
    return v;
}

/// Which sphere integral enters the coupled matrix-element sum.
enum class SphereIntegral {
    closed_form,  ///< S_integral
    eta_integral  ///< eta_sphere_integral
};

inline cnum sphere_integral(SphereIntegral src, HalfInt L, HalfInt q, HalfInt qp, SpherePoint x) {
    return src == SphereIntegral::closed_form ? S_integral(L, q, qp, x) : eta_sphere_integral(L, q, qp, x);
}

/// <l m|C^k_q|lbar mbar> written as a sum over the components at x':
///   sum_{m' q' mbar'} (-1)^{m-m'} conj(Y^l_{m'}(x')) C^k_{q'}(x') Y^lbar_{mbar'}(x')
///   sum_{Lb L} <l,-m;k,q|Lb,-mbar> <l,-m';k,q'|Lb,Mb'> <Lb,-mbar;lbar,mbar|L,0>
///              <Lb,Mb';lbar,mbar'|L,M'> S^L_{0M'}(x'),
/// Mb' = q' - m', M' = Mb' + mbar'. The value should not depend on x'.
inline cnum c3_sum(HalfInt l, HalfInt m, HalfInt k, HalfInt q, HalfInt lbar, HalfInt mbar, SpherePoint xp,
                   SphereIntegral src = SphereIntegral::closed_form) {
    require_compatible(l, m, "c3_sum");
    require_compatible(k, q, "c3_sum");
    require_compatible(lbar, mbar, "c3_sum");
    (void)l.as_int();
    (void)k.as_int();
    (void)lbar.as_int();
    std::map<std::pair<int, int>, cnum> s_memo;
    auto S = [&](HalfInt L, HalfInt M) {
        auto key = std::make_pair(L.as_int(), M.as_int());
        auto it = s_memo.find(key);
        if (it != s_memo.end()) return it->second;
        const cnum v = sphere_integral(src, L, 0, M, xp);
        s_memo.emplace(key, v);
        return v;
    };
    cnum total = 0.0;
    for (HalfInt mp = -l; mp <= l; mp += 1) {
        const cnum yb = std::conj(y_harmonic(l, mp, xp));
        for (HalfInt qp = -k; qp <= k; qp += 1) {
            const cnum ck = c_operator(k, qp, xp);
            for (HalfInt mbp = -lbar; mbp <= lbar; mbp += 1) {
                const cnum pre = m1pow(m - mp) * yb * ck * y_harmonic(lbar, mbp, xp);
                if (pre == 0.0) continue;
                const HalfInt Mbp = qp - mp, Mp = Mbp + mbp;
                cnum inner = 0.0;
                for (HalfInt Lb = abs(l - k); Lb <= l + k; Lb += 1) {
                    if (!compatible(Lb, mbar) || !compatible(Lb, Mbp)) continue;
                    const double c12 = cgc(l, -m, k, q, Lb, -mbar) * cgc(l, -mp, k, qp, Lb, Mbp);
                    if (c12 == 0.0) continue;
                    for (HalfInt L = abs(Lb - lbar); L <= Lb + lbar; L += 1) {
                        if (!compatible(L, Mp)) continue;
                        const double c34 = cgc(Lb, -mbar, lbar, mbar, L, 0) * cgc(Lb, Mbp, lbar, mbp, L, Mp);
                        if (c34 != 0.0) inner += c12 * c34 * S(L, Mp);
                    }
                }
                total += pre * inner;
            }
        }
    }
    return total;
}

/// g^l_mu as a closure over mu, with the radial arguments frozen.
struct RadialWeight {
    std::function<cnum(int)> g;
    double r_less = 0.5;
    double r_greater = 1.0;
};

struct CoulombOptions {
    double theta_tol = 1e-12;
};

/// Angular part of <Psi^l_m|1/r12|Psi^l'_m'> for
/// Psi^l_m = sum_mu g^l_mu eta^l_{m mu}:
///   (-1)^{m-m'} sum_mu (-1)^mu conj(g^l_mu) g^l'_{mu+m-m'}
///   sum_k r<^k/r>^{k+1} sum_K sum_{Q even} i^{-K} <k0k0|K0>
///   sum_Lb J(K,Q,Lb) sum_L <k,m-m';k,Q+m'-m|K,Q> <l,-m;k,m-m'|L,-m'>
///     <L,-m';l',m'|Lb,0> <l,-mu;k,Q+m'-m|L,Q+m'-m-mu>
///     <L,Q+m'-m-mu;l',m-m'+mu|Lb,Q>,
/// J(K,Q,Lb) = int C^K_Q(x) S^Lb_{0Q}(x) dx. The phi integral is done
/// analytically (the integrand does not depend on phi), theta by quadrature.
inline cnum coulomb_2e_angular(int l, int m, int lp, int mp, const RadialWeight& g_bra, const RadialWeight& g_ket,
                               int k_max, const CoulombOptions& opt = {}) {
    if (k_max < 0) throw domain_error("coulomb_2e_angular: k_max must be non-negative");
    if (l < 0 || lp < 0 || std::abs(m) > l || std::abs(mp) > lp)
        throw domain_error("coulomb_2e_angular: incompatible (l, m) or (l', m')");
    if (!g_bra.g || !g_ket.g) throw domain_error("coulomb_2e_angular: missing radial weight");
    if (!(g_bra.r_less > 0.0) || !(g_bra.r_greater > 0.0))
        throw domain_error("coulomb_2e_angular: radii must be positive");
    std::map<std::tuple<int, int, int>, cnum> j_memo;
    auto J = [&](int K, int Q, int Lb) {
        const auto key = std::make_tuple(K, Q, Lb);
        auto it = j_memo.find(key);
        if (it != j_memo.end()) return it->second;
        const cnum v = two_pi * integrate_1d<cnum>(
                                    [&](double t) {
                                        const SpherePoint x{t, 0.0};
                                        return std::sin(t) * c_operator(K, Q, x) * S_integral(Lb, 0, Q, x);
                                    },
                                    0.0, pi, opt.theta_tol);
        j_memo.emplace(key, v);
        return v;
    };
    auto cg = [](int j1, int m1, int j2, int m2, int j, int mm) {
        if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(mm) > j) return 0.0;
        return cgc(j1, m1, j2, m2, j, mm);
    };
    const int dm = m - mp;
    cnum total = 0.0;
    for (int mu = -l; mu <= l; ++mu) {
        const int nu = mu + dm;
        if (std::abs(nu) > lp) continue;
        const cnum gg = sign_pow(mu) * std::conj(g_bra.g(mu)) * g_ket.g(nu);
        if (gg == 0.0) continue;
        cnum ksum = 0.0;
        for (int k = 0; k <= k_max; ++k) {
            const double wk = std::pow(g_bra.r_less, k) / std::pow(g_bra.r_greater, k + 1);
            for (int K = 0; K <= 2 * k; ++K) {
                const double ck = cg(k, 0, k, 0, K, 0);
                if (ck == 0.0) continue;
                for (int Q = -K; Q <= K; ++Q) {
                    if (Q % 2 != 0) continue;
                    for (int Lb = 0; Lb <= l + k + lp; ++Lb) {
                        double inner = 0.0;
                        for (int L = std::abs(l - k); L <= l + k; ++L)
                            inner += cg(k, dm, k, Q - dm, K, Q) * cg(l, -m, k, dm, L, -mp) * cg(L, -mp, lp, mp, Lb, 0) *
                                     cg(l, -mu, k, Q - dm, L, Q - dm - mu) * cg(L, Q - dm - mu, lp, dm + mu, Lb, Q);
                        if (inner != 0.0) ksum += wk * ipow(-K) * ck * J(K, Q, Lb) * inner;
                    }
                }
            }
        }
        total += gg * ksum;
    }
    return sign_pow(dm) * total;
}

}  // namespace rcgc
