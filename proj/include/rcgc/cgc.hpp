// SPDX-License-Identifier: MIT
//
// Clebsch-Gordan coefficients in the Condon-Shortley phase convention,
// evaluated exactly with big integers and rounded once.

#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <mutex>

#include "halfint.hpp"

namespace rcgc {

namespace detail {

inline mpz_class binom(long n, long k) {
    mpz_class r;
    if (k < 0 || k > n || n < 0) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// sign(s) * sqrt(s^2 * r) with s an integer and r a rational, rounded to
// double from a 256-bit intermediate.
inline double signed_sqrt_product(const mpz_class& s, const mpq_class& r) {
    if (s == 0 || r == 0) return 0.0;
    mpq_class sq = r * mpq_class(s * s);
    mpf_class f(0, 256), num(sq.get_num(), 256), den(sq.get_den(), 256);
    f = num / den;
    f = sqrt(f);
    double v = f.get_d();
    return s < 0 ? -v : v;
}

// Binomial form
//   <j1 m1 j2 m2|J M> = sqrt[(2J+1)/(2J+N1+1) * C(2j1,N1) C(2j2,N1)
//                        / (C(2J+N1,N1) C(2j1,j1+m1) C(2j2,j2+m2) C(2J,J+M))]
//                       * sum_k (-1)^k C(N1,k) C(N2,j1-m1-k) C(N3,j2+m2-k)
// with N1 = j1+j2-J, N2 = j1-j2+J, N3 = -j1+j2+J.
inline double cgc_binomial(int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
    const long n1 = (tj1 + tj2 - tj) / 2, n2 = (tj1 - tj2 + tj) / 2, n3 = (-tj1 + tj2 + tj) / 2;
    const long a = (tj1 - tm1) / 2, b = (tj2 + tm2) / 2;
    mpz_class s = 0;
    for (long k = 0; k <= n1; ++k) {
        if (a - k < 0 || b - k < 0) break;
        mpz_class t = binom(n1, k) * binom(n2, a - k) * binom(n3, b - k);
        if (k % 2) s -= t;
        else s += t;
    }
    mpq_class r(mpz_class(tj + 1) * binom(tj1, n1) * binom(tj2, n1),
                mpz_class(tj + n1 + 1) * binom(tj + n1, n1) * binom(tj1, (tj1 + tm1) / 2) *
                    binom(tj2, (tj2 + tm2) / 2) * binom(tj, (tj + tm) / 2));
    r.canonicalize();
    return signed_sqrt_product(s, r);
}

}  // namespace detail

/// <j1 m1 j2 m2 | j m>. Zero when the triangle or projection-sum condition
/// fails; throws domain_error for an incompatible (j, m) pair.
inline double cgc(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
    require_compatible(j1, m1, "cgc");
    require_compatible(j2, m2, "cgc");
    require_compatible(j, m, "cgc");
    if (m1 + m2 != m) return 0.0;
    if (!Triangle{j1, j2, j}.couples()) return 0.0;

    using key_t = std::array<int, 6>;
    static std::mutex mtx;
    static std::map<key_t, double> memo;
    const key_t key{j1.twice(), m1.twice(), j2.twice(), m2.twice(), j.twice(), m.twice()};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    double v = detail::cgc_binomial(key[0], key[1], key[2], key[3], key[4], key[5]);
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(key, v);
    return v;
}

}  // namespace rcgc
