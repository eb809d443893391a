// Exact integer and rational arithmetic primitives shared by the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace seifert {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

// Module-level error: precondition violations, unsupported inputs.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input (JSON schema, CLI arguments).
struct bad_input : std::runtime_error {
    explicit bad_input(const std::string& what) : std::runtime_error(what) {}
};

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

// gcd(a,b) = a*x + b*y
inline long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Inverse of a modulo n, canonical representative in [0, n).
inline long long mod_inverse(long long a, long long n) {
    if (n <= 0) throw error("mod_inverse: modulus must be positive");
    long long r = a % n;
    if (r < 0) r += n;
    long long x, y;
    long long g = ext_gcd(r, n, x, y);
    if (g != 1)
        throw error("mod_inverse: arguments are not coprime (gcd=" + std::to_string(g) + ")");
    if (n == 1) return 0;
    long long inv = x % n;
    if (inv < 0) inv += n;
    return inv;
}

inline Rational make_rational(long long num, long long den) {
    return Rational(Int(num), Int(den));
}

inline std::string rational_to_string(const Rational& r) {
    return r.numerator().str() + "/" + r.denominator().str();
}

} // namespace seifert
