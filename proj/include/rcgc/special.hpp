// SPDX-License-Identifier: MIT
//
// Factorials, the Beta function and the Gauss hypergeometric function on the
// non-positive real axis.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "halfint.hpp"

namespace rcgc {

namespace detail {

inline constexpr std::array<double, 21> factorial_table = [] {
    std::array<double, 21> t{};
    t[0] = 1.0;
    for (int i = 1; i <= 20; ++i) t[i] = t[i - 1] * i;
    return t;
}();

inline bool is_nonpos_int(double x) { return x <= 0.0 && x == std::floor(x); }

// 1/Gamma(x), zero at the poles.
inline double rgamma(double x) {
    if (is_nonpos_int(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

// Sum of the Gauss series at |z| < 1. Terminates exactly when a or b is a
// non-positive integer.
inline double series_2f1(double a, double b, double c, double z, int cap = 20000) {
    const bool terminating = is_nonpos_int(a) || is_nonpos_int(b);
    double term = 1.0, sum = 1.0;
    int quiet = 0;
    for (int j = 0; j < cap; ++j) {
        term *= (a + j) * (b + j) / ((c + j) * (j + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum;
        if (terminating) continue;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    std::ostringstream os;
    os.precision(17);
    os << "2F1(" << a << ", " << b << "; " << c << "; " << z << ") did not converge after " << cap
       << " terms; partial sum " << sum << ", last term " << term;
    throw numeric_error(os.str());
}

}  // namespace detail

/// ln(n!) for integer n >= 0: table below 21, log-gamma above.
inline double factorial_ln(double n) {
    if (!(n >= 0.0) || n != std::floor(n)) {
        std::ostringstream os;
        os << "factorial_ln: argument must be a non-negative integer, got " << n;
        throw domain_error(os.str());
    }
    if (n <= 20.0) return std::log(detail::factorial_table[static_cast<int>(n)]);
    return std::lgamma(n + 1.0);
}

/// n! as a double (exact for n <= 20).
inline double factorial(int n) {
    if (n < 0) throw domain_error("factorial: negative argument " + std::to_string(n));
    if (n <= 20) return detail::factorial_table[n];
    return std::exp(std::lgamma(n + 1.0));
}

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
inline double beta(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) {
        std::ostringstream os;
        os << "beta: arguments must be positive, got (" << x << ", " << y << ")";
        throw domain_error(os.str());
    }
    double lo = std::min(x, y), hi = std::max(x, y);
    if (lo + hi < 170.0) return std::tgamma(lo) * (std::tgamma(hi) / std::tgamma(lo + hi));
    return std::exp(std::lgamma(lo) + std::lgamma(hi) - std::lgamma(lo + hi));
}

/// 2F1(a, b; c; z) for real z <= 0.
///
/// Terminating parameters are summed directly. Otherwise z in [-1, 0] goes
/// through the Pfaff transformation to w = z/(z-1) in [0, 1/2]; z < -1 uses
/// the 1/(1-z) connection formula, or the Pfaff series when a - b is an
/// integer.
inline double gauss_2f1(double a, double b, double c, double z) {
    using detail::is_nonpos_int;
    if (is_nonpos_int(c)) throw domain_error("gauss_2f1: c must not be a non-positive integer");
    if (!(z <= 0.0)) throw domain_error("gauss_2f1: argument must satisfy z <= 0");
    if (z == 0.0) return 1.0;
    if (is_nonpos_int(a) || is_nonpos_int(b)) {
        if (!std::isfinite(z)) throw domain_error("gauss_2f1: polynomial evaluated at infinity");
        return detail::series_2f1(a, b, c, z);
    }
    if (!std::isfinite(z)) throw domain_error("gauss_2f1: infinite argument");

    const double w = z / (z - 1.0);
    // Pfaff variants that terminate are exact for any z.
    if (is_nonpos_int(c - b)) return std::pow(1.0 - z, -a) * detail::series_2f1(a, c - b, c, w);
    if (is_nonpos_int(c - a)) return std::pow(1.0 - z, -b) * detail::series_2f1(c - a, b, c, w);

    if (z >= -1.0) return std::pow(1.0 - z, -a) * detail::series_2f1(a, c - b, c, w);

    const double d = a - b;
    if (d != std::floor(d)) {
        const double u = 1.0 / (1.0 - z);
        double t1 = std::tgamma(c) * std::tgamma(b - a) * detail::rgamma(b) * detail::rgamma(c - a);
        double t2 = std::tgamma(c) * std::tgamma(a - b) * detail::rgamma(a) * detail::rgamma(c - b);
        double v = 0.0;
        if (t1 != 0.0) v += t1 * std::pow(u, a) * detail::series_2f1(a, c - b, a - b + 1.0, u);
        if (t2 != 0.0) v += t2 * std::pow(u, b) * detail::series_2f1(b, c - a, b - a + 1.0, u);
        if (!std::isfinite(v)) throw numeric_error("gauss_2f1: connection formula overflowed");
        return v;
    }
    return std::pow(1.0 - z, -a) * detail::series_2f1(a, c - b, c, w, 200000);
}

}  // namespace rcgc
