#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace nfrac {

// Arbitrary-precision signed integer. Everything exact in this library is
// built on top of it; fixed-width integers appear only inside kernels that
// have explicit range guards.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// a mod m normalized into [0, m), m > 0. cpp_int's % keeps the dividend sign.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

// floor(a / b) for b > 0.
inline BigInt div_floor(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && (a < 0)) --q;
    return q;
}

// g = gcd(a, b) together with x, y such that a*x + b*y = g, g >= 0.
struct ExtGcd {
    BigInt g, x, y;
};

inline ExtGcd extended_gcd(BigInt a, BigInt b) {
    BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        BigInt q = a / b;
        BigInt r = a - q * b;
        a = std::exchange(b, r);
        BigInt nx = x0 - q * x1;
        x0 = std::exchange(x1, nx);
        BigInt ny = y0 - q * y1;
        y0 = std::exchange(y1, ny);
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    return {a, x0, y0};
}

// Inverse of a modulo m (m >= 1); requires gcd(a, m) = 1. For m = 1 the
// inverse is 0, the only residue.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m == 1) return 0;
    ExtGcd e = extended_gcd(mod_floor(a, m), m);
    if (e.g != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_floor(e.x, m);
}

// floor(a^(1/r)) for a >= 0, r >= 1, by Newton iteration with a bit-length
// seed and a final exact clamp.
inline BigInt iroot_floor(const BigInt& a, unsigned r) {
    if (a < 0) throw std::invalid_argument("iroot_floor: negative radicand");
    if (r == 0) throw std::invalid_argument("iroot_floor: zeroth root");
    if (a == 0 || r == 1) return a;
    const unsigned bits = boost::multiprecision::msb(a) + 1;
    BigInt x = BigInt(1) << (bits / r + 1);
    for (;;) {
        BigInt y = ((r - 1) * x + a / big_pow(x, r - 1)) / r;
        if (y >= x) break;
        x = y;
    }
    while (big_pow(x, r) > a) --x;
    while (big_pow(x + 1, r) <= a) ++x;
    return x;
}

// Sign of x - base^(p/r) for x >= 1, base >= 1, r >= 1 (p may be negative):
// returns -1, 0, or +1. Decided exactly as x^r <=> base^p.
inline int cmp_pow(const BigInt& x, const BigInt& base, long long p, long long r) {
    if (x < 1 || base < 1 || r < 1) throw std::invalid_argument("cmp_pow: bad arguments");
    BigInt lhs = big_pow(x, static_cast<unsigned>(r));
    BigInt rhs;
    if (p >= 0) {
        rhs = big_pow(base, static_cast<unsigned>(p));
    } else {
        lhs *= big_pow(base, static_cast<unsigned>(-p));
        rhs = 1;
    }
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

// floor(c * base^(p/r)) for c >= 0, base >= 1, r >= 1, any integer p.
// Uses floor(y^(1/r)) = iroot_floor(floor(y)) which is exact for rational y.
inline BigInt floor_mul_pow(const BigInt& c, const BigInt& base, long long p, long long r) {
    if (c < 0 || base < 1 || r < 1) throw std::invalid_argument("floor_mul_pow: bad arguments");
    if (c == 0) return 0;
    BigInt inner = big_pow(c, static_cast<unsigned>(r));
    if (p >= 0)
        inner *= big_pow(base, static_cast<unsigned>(p));
    else
        inner /= big_pow(base, static_cast<unsigned>(-p));
    return iroot_floor(inner, static_cast<unsigned>(r));
}

// ceil(c * base^(p/r)), same domain as floor_mul_pow. Exact: the value is an
// integer only when c^r * base^p is a perfect r-th power.
inline BigInt ceil_mul_pow(const BigInt& c, const BigInt& base, long long p, long long r) {
    if (c == 0) return 0;
    BigInt f = floor_mul_pow(c, base, p, r);
    // f == value iff f^r * base^{-min(p,0)} ... compare exactly via cross products
    BigInt lhs = big_pow(f, static_cast<unsigned>(r));
    BigInt crp = big_pow(c, static_cast<unsigned>(r));
    if (p >= 0)
        crp *= big_pow(base, static_cast<unsigned>(p));
    else
        lhs *= big_pow(base, static_cast<unsigned>(-p));
    return lhs == crp ? f : f + 1;
}

// Lossy conversion for display and ratio reporting; scales by powers of two
// first so values far outside double range do not overflow.
inline double big_to_double(const BigInt& a) {
    if (a == 0) return 0.0;
    const BigInt m = big_abs(a);
    const unsigned bits = boost::multiprecision::msb(m) + 1;
    if (bits <= 1000) return a.convert_to<double>();
    const unsigned shift = bits - 512;
    double d = BigInt(m >> shift).convert_to<double>();
    d = std::ldexp(d, static_cast<int>(shift));
    return a < 0 ? -d : d;
}

}  // namespace nfrac
