// SPDX-License-Identifier: MIT
//
// Brute-force reference evaluations: Gauss-Legendre quadrature on intervals,
// spheres and products of spheres, and an exact Racah-sum CGC.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "geometry.hpp"
#include "halfint.hpp"
#include "sphfun.hpp"
#include "wigner.hpp"

namespace rcgc {

struct QuadratureSpec {
    int nodes_theta = 32;
    int nodes_phi = 64;
    double refine_tol = 1e-10;
    int max_refinements = 4;
};

struct GaussRule {
    std::vector<double> x, w;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton on P_n), cached.
inline const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw domain_error("gauss_legendre: n must be positive");
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = -x;
        r.w[i] = w;
        r.x[n - 1 - i] = x;
        r.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.x[n / 2] = 0.0;
    return cache.emplace(n, std::move(r)).first->second;
}

/// Worker count: RCGC_KIT_THREADS if set, else the hardware concurrency.
inline unsigned worker_count() {
    if (const char* s = std::getenv("RCGC_KIT_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

/// Evaluates f(0..n-1) on worker threads and returns the results in index
/// order, so that later reductions do not depend on scheduling.
template <class T>
std::vector<T> parallel_map(int n, const std::function<T(int)>& f) {
    std::vector<T> out(n);
    const unsigned nt = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max(n, 1)));
    if (nt <= 1) {
        for (int i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mtx;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (int i; (i = next++) < n;) {
                try {
                    out[i] = f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mtx);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

namespace detail {

template <class T>
T gl_panels(const std::function<T(double)>& f, double a, double b, int panels, int order) {
    const GaussRule& g = gauss_legendre(order);
    const double h = (b - a) / panels;
    T s{};
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h, mid = lo + 0.5 * h;
        for (int i = 0; i < order; ++i) s += (0.5 * h * g.w[i]) * f(mid + 0.5 * h * g.x[i]);
    }
    return s;
}

template <class T>
[[noreturn]] void throw_nonconvergence(const char* what, const T& a, const T& b) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": no convergence; last estimates " << a << " and " << b;
    throw numeric_error(os.str());
}

}  // namespace detail

/// Composite 20-point Gauss-Legendre on [a, b], doubling the panel count
/// until successive estimates agree to tol.
template <class T>
T integrate_1d(const std::function<T(double)>& f, double a, double b, double tol = 1e-13, int max_panels = 4096) {
    T prev = detail::gl_panels<T>(f, a, b, 1, 20), last = prev;
    for (int panels = 2; panels <= max_panels; panels *= 2) {
        T cur = detail::gl_panels<T>(f, a, b, panels, 20);
        if (std::abs(cur - prev) <= tol * std::max(1.0, static_cast<double>(std::abs(cur)))) return cur;
        last = prev;
        prev = cur;
    }
    detail::throw_nonconvergence("integrate_1d", last, prev);
}

namespace detail {

// Gauss-Legendre in theta (with the sin(theta) Jacobian) times the periodic
// trapezoid rule in phi. Integrands built from D functions of theta2 - theta1
// carry odd powers of sin(theta), which are smooth in theta but not in
// cos(theta).
inline cnum sphere_rule(const std::function<cnum(SpherePoint)>& f, int nt, int np) {
    const GaussRule& g = gauss_legendre(nt);
    const double dphi = two_pi / np;
    auto rows = parallel_map<cnum>(nt, [&](int i) {
        const double t = 0.5 * pi * (1.0 + g.x[i]);
        cnum s = 0.0;
        for (int j = 0; j < np; ++j) s += f({t, j * dphi});
        return 0.5 * pi * g.w[i] * std::sin(t) * dphi * s;
    });
    cnum s = 0.0;
    for (const auto& r : rows) s += r;
    return s;
}

}  // namespace detail

/// int_{S^2} f dx with dx = sin(theta) dtheta dphi; node counts doubled
/// until successive estimates differ by less than refine_tol.
inline cnum integrate_sphere(const std::function<cnum(SpherePoint)>& f, const QuadratureSpec& spec = {}) {
    if (spec.nodes_theta < 8 || spec.nodes_phi < 8) throw domain_error("integrate_sphere: node counts must be >= 8");
    if (!(spec.refine_tol > 0.0)) throw domain_error("integrate_sphere: refine_tol must be positive");
    int nt = spec.nodes_theta, np = spec.nodes_phi;
    cnum prev = detail::sphere_rule(f, nt, np), last = prev;
    for (int r = 0; r < spec.max_refinements; ++r) {
        nt *= 2;
        np *= 2;
        cnum cur = detail::sphere_rule(f, nt, np);
        if (std::abs(cur - prev) < spec.refine_tol) return cur;
        last = prev;
        prev = cur;
    }
    detail::throw_nonconvergence("integrate_sphere", last, prev);
}

namespace detail {

inline std::vector<std::pair<SpherePoint, double>> sphere_nodes(int nt, int np) {
    const GaussRule& g = gauss_legendre(nt);
    const double dphi = two_pi / np;
    std::vector<std::pair<SpherePoint, double>> v;
    v.reserve(static_cast<size_t>(nt) * np);
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < np; ++j) {
            const double t = 0.5 * pi * (1.0 + g.x[i]);
            v.push_back({{t, j * dphi}, 0.5 * pi * g.w[i] * std::sin(t) * dphi});
        }
    return v;
}

inline cnum sphere2_rule(const std::function<cnum(SpherePoint, SpherePoint)>& f, int nt, int np) {
    const auto nodes = sphere_nodes(nt, np);
    auto outer = parallel_map<cnum>(static_cast<int>(nodes.size()), [&](int i) {
        cnum s = 0.0;
        for (const auto& [x2, w2] : nodes) s += w2 * f(nodes[i].first, x2);
        return nodes[i].second * s;
    });
    cnum s = 0.0;
    for (const auto& r : outer) s += r;
    return s;
}

}  // namespace detail

/// int_{S^2 x S^2} f dx1 dx2, same rules and refinement as integrate_sphere.
inline cnum integrate_sphere2(const std::function<cnum(SpherePoint, SpherePoint)>& f, const QuadratureSpec& spec = {}) {
    if (spec.nodes_theta < 8 || spec.nodes_phi < 8) throw domain_error("integrate_sphere2: node counts must be >= 8");
    if (!(spec.refine_tol > 0.0)) throw domain_error("integrate_sphere2: refine_tol must be positive");
    int nt = spec.nodes_theta, np = spec.nodes_phi;
    cnum prev = detail::sphere2_rule(f, nt, np), last = prev;
    for (int r = 0; r < spec.max_refinements; ++r) {
        nt *= 2;
        np *= 2;
        cnum cur = detail::sphere2_rule(f, nt, np);
        if (std::abs(cur - prev) < spec.refine_tol) return cur;
        last = prev;
        prev = cur;
    }
    detail::throw_nonconvergence("integrate_sphere2", last, prev);
}

/// coef * sqrt(radicand), both exact rationals.
struct ExactCgc {
    mpq_class coef = 0;
    mpq_class radicand = 1;
    double to_double() const {
        if (coef == 0) return 0.0;
        mpf_class r(radicand, 256), c(coef, 256);
        mpf_class v = c * sqrt(r);
        return v.get_d();
    }
};

/// Racah's single-sum formula in exact rational arithmetic.
inline ExactCgc cgc_exact(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
    ExactCgc out;
    if (!compatible(j1, m1) || !compatible(j2, m2) || !compatible(j, m)) return out;
    if (m1 + m2 != m || !Triangle{j1, j2, j}.couples()) return out;
    auto fact = [](long n) {
        mpz_class r;
        mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    };
    auto I = [](HalfInt x) { return static_cast<long>(x.as_int()); };
    out.radicand = mpq_class(mpz_class(j.twice() + 1) * fact(I(j + j1 - j2)) * fact(I(j - j1 + j2)) *
                                 fact(I(j1 + j2 - j)) * fact(I(j + m)) * fact(I(j - m)) * fact(I(j1 - m1)) *
                                 fact(I(j1 + m1)) * fact(I(j2 - m2)) * fact(I(j2 + m2)),
                             fact(I(j1 + j2 + j) + 1));
    out.radicand.canonicalize();
    mpq_class s = 0;
    for (long k = 0;; ++k) {
        const long d[6] = {k, I(j1 + j2 - j) - k, I(j1 - m1) - k, I(j2 + m2) - k, I(j - j2 + m1) + k,
                           I(j - j1 - m2) + k};
        if (d[1] < 0 || d[2] < 0 || d[3] < 0) break;
        if (d[4] < 0 || d[5] < 0) continue;
        mpz_class den = 1;
        for (long v : d) den *= fact(v);
        mpq_class t(1, den);
        t.canonicalize();
        if (k % 2) s -= t;
        else s += t;
    }
    out.coef = s;
    return out;
}

/// Brute-force integral over x2 of the piecewise spherical function of the
/// four Omega_1 areas: xi+ on phi2 in [0, pi], theta2 <= theta1; xi- on
/// phi2 in [0, pi], theta2 >= theta1; theta+ and theta- likewise on
/// phi2 in [pi, 2 pi]. n' is the winding that brings Psi = delta(phi1 + pi/2)
/// into [0, 2 pi). Each area uses a Gauss-Legendre product rule in
/// (theta2, phi2) so the seams are never sampled across.
inline cnum s_integral_oracle(HalfInt k, HalfInt q, HalfInt qp, SpherePoint x1, double tol = 1e-11, int n0 = 24,
                              int max_refinements = 4) {
    detail::require_indices(k, q, qp, "s_integral_oracle");
    x1 = normalized(x1);
    auto tuple = [&](Family f) {
        BranchSpec b = family_tuple(f);
        b.n = 0;
        if (b.delta < 0) b.n_prime = (x1.phi <= 1.5 * pi) ? 1 : 2;
        else b.n_prime = (x1.phi <= 0.5 * pi) ? 0 : 1;
        return b;
    };
    struct Area {
        BranchSpec b;
        double t0, t1, p0, p1;
    };
    const Area areas[4] = {{tuple(Family::xi_p), 0.0, x1.theta, 0.0, pi},
                           {tuple(Family::xi_m), x1.theta, pi, 0.0, pi},
                           {tuple(Family::theta_p), 0.0, x1.theta, pi, two_pi},
                           {tuple(Family::theta_m), x1.theta, pi, pi, two_pi}};
    auto rule = [&](int n) {
        const GaussRule& g = gauss_legendre(n);
        cnum total = 0.0;
        for (const Area& a : areas) {
            if (a.t1 <= a.t0) continue;
            const double ht = 0.5 * (a.t1 - a.t0), hp = 0.5 * (a.p1 - a.p0);
            auto rows = parallel_map<cnum>(n, [&](int i) {
                const double t = a.t0 + ht * (1.0 + g.x[i]);
                cnum s = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p = a.p0 + hp * (1.0 + g.x[j]);
                    s += g.w[j] * sphfun_general({a.b, k, q, qp}, x1, {t, p});
                }
                return g.w[i] * std::sin(t) * s;
            });
            cnum s = 0.0;
            for (const auto& r : rows) s += r;
            total += ht * hp * s;
        }
        return total;
    };
    int n = n0;
    cnum prev = rule(n), last = prev;
    for (int r = 0; r < max_refinements; ++r) {
        n *= 2;
        cnum cur = rule(n);
        if (std::abs(cur - prev) < tol) return cur;
        last = prev;
        prev = cur;
    }
    detail::throw_nonconvergence("s_integral_oracle", last, prev);
}

/// <l m| C^k_q |lbar mbar> = int conj(Y^l_m) C^k_q Y^lbar_mbar dx by
/// quadrature.
inline cnum gaunt_oracle(HalfInt l, HalfInt m, HalfInt k, HalfInt q, HalfInt lbar, HalfInt mbar,
                         const QuadratureSpec& spec = {}) {
    return integrate_sphere(
        [&](SpherePoint x) { return std::conj(y_harmonic(l, m, x)) * c_operator(k, q, x) * y_harmonic(lbar, mbar, x); },
        spec);
}

/// Two-electron angular function sum_mu g_mu eta^l_{m mu}(x1, x2) with
/// eta taken as D^l(phi2 + pi/2, theta2 - theta1, -phi1 - pi/2), the
/// rotation carrying x1 to x2.
inline cnum two_electron_wave(HalfInt l, HalfInt m, const std::function<cnum(int)>& g, SpherePoint x1,
                              SpherePoint x2) {
    cnum s = 0.0;
    const EulerAngles om{x2.phi + 0.5 * pi, x2.theta - x1.theta, -x1.phi - 0.5 * pi};
    for (HalfInt mu = -l; mu <= l; mu += 1) {
        const cnum gm = g(mu.as_int());
        if (gm != 0.0) s += gm * wigner_d(l, m, mu, om);
    }
    return s;
}

/// <Psi^l_m | sum_{k <= k_max} w_k P_k(cos omega12) | Psi^l'_m'> over
/// S^2 x S^2 by tensor quadrature, w_k = r_<^k / r_>^{k+1}.
inline cnum coulomb_2e_oracle(int l, int m, int lp, int mp, const std::function<cnum(int)>& g_bra,
                              const std::function<cnum(int)>& g_ket, double r_less, double r_greater, int k_max,
                              const QuadratureSpec& spec = {8, 16, 1e-9, 3}) {
    if (k_max < 0) throw domain_error("coulomb_2e_oracle: k_max must be non-negative");
    std::vector<double> w(k_max + 1);
    for (int k = 0; k <= k_max; ++k) w[k] = std::pow(r_less, k) / std::pow(r_greater, k + 1);
    return integrate_sphere2(
        [&](SpherePoint x1, SpherePoint x2) {
            const double c = std::cos(x1.theta) * std::cos(x2.theta) +
                             std::sin(x1.theta) * std::sin(x2.theta) * std::cos(x1.phi - x2.phi);
            double v = 0.0;
            for (int k = 0; k <= k_max; ++k) v += w[k] * std::legendre(k, std::clamp(c, -1.0, 1.0));
            return std::conj(two_electron_wave(l, m, g_bra, x1, x2)) * v * two_electron_wave(lp, mp, g_ket, x1, x2);
        },
        spec);
}

}  // namespace rcgc
