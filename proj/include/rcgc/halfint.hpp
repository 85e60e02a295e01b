// SPDX-License-Identifier: MIT
//
// Half-integer quantum numbers, complex values and the error types shared by
// the whole library.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rcgc {

using cnum = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

/// Raised for arguments outside the mathematical domain of an operation.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when an iterative evaluation fails to converge or produces a
/// non-finite value.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised for the coordinate pair theta1 = theta2 = 0, where only the sum
/// Phi + Psi of the Euler angles is defined.
struct degenerate_rotation_error : domain_error {
    using domain_error::domain_error;
};

/// Value twice/2; twice = 5 stands for 5/2.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int v) : twice_(2 * v) {}

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    /// Accepts "3", "-2", "5/2", "-1/2".
    static HalfInt parse(const std::string& s) {
        auto slash = s.find('/');
        std::size_t pos = 0;
        try {
            if (slash == std::string::npos) {
                int v = std::stoi(s, &pos);
                if (pos != s.size()) throw std::invalid_argument(s);
                return HalfInt(v);
            }
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            int n = std::stoi(num, &pos);
            if (pos != num.size()) throw std::invalid_argument(s);
            int d = std::stoi(den, &pos);
            if (pos != den.size()) throw std::invalid_argument(s);
            if (d == 1) return HalfInt(n);
            if (d == 2) return from_twice(n);
        } catch (const std::logic_error&) {
        }
        throw std::invalid_argument("not a half-integer: '" + s + "'");
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * twice_; }

    int as_int() const {
        if (!is_integer()) throw domain_error("half-integer used where an integer is required: " + str());
        return twice_ / 2;
    }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

private:
    int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

/// |m| <= j and j - m integer.
constexpr bool compatible(HalfInt j, HalfInt m) {
    return j.twice() >= 0 && std::abs(m.twice()) <= j.twice() && (j.twice() - m.twice()) % 2 == 0;
}

inline void require_compatible(HalfInt j, HalfInt m, const char* what) {
    if (!compatible(j, m))
        throw domain_error(std::string(what) + ": incompatible pair (" + j.str() + ", " + m.str() + ")");
}

/// Coupling triple; valid when |j1-j2| <= j3 <= j1+j2 and j1+j2+j3 is integer.
struct Triangle {
    HalfInt j1, j2, j3;
    constexpr bool couples() const {
        int a = j1.twice(), b = j2.twice(), c = j3.twice();
        if (a < 0 || b < 0 || c < 0) return false;
        if ((a + b + c) % 2 != 0) return false;
        return c >= std::abs(a - b) && c <= a + b;
    }
};

/// i^x for x in Z/2, i.e. exp(i pi x / 2); exact eighth roots of unity.
inline cnum ipow(HalfInt x) {
    static constexpr double r = 0.70710678118654752440084436210484903928;
    static const cnum table[8] = {{1, 0}, {r, r}, {0, 1}, {-r, r}, {-1, 0}, {-r, -r}, {0, -1}, {r, -r}};
    int t = x.twice() % 8;
    if (t < 0) t += 8;
    return table[t];
}

/// (-1)^x = exp(i pi x) for x in Z/2.
inline cnum m1pow(HalfInt x) { return ipow(x + x); }

/// (-1)^n for integer n.
constexpr double sign_pow(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace rcgc
