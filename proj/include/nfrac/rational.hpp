#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "nfrac/bigint.hpp"

namespace nfrac {

// Exact rational number in canonical reduced form:
//   - denominator always >= 1 (sign lives in the numerator),
//   - gcd(|num|, den) = 1 after every operation,
//   - zero is 0/1.
// Equality is therefore plain structural equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const BigInt l = num_ * o.den_, r = o.num_ * den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q" (reduced) or "p" when the value is an integer.
    std::string str() const;

    // Accepts "p/q" or "p" with an optional leading minus; rejects anything else.
    static Rational parse(std::string_view text);

    double to_double() const;

private:
    struct unchecked {};
    Rational(unchecked, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize();

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& x) { return x.is_negative() ? -x : x; }

// Distance from x to the nearest integer, exactly: for x = p/q this is
// min(r, q - r)/q with r = p mod q. Always in [0, 1/2]; exact half stays 1/2.
Rational dist_nearest_int(const Rational& x);

// floor(x) as an integer.
BigInt floor_int(const Rational& x);

// Nearest integer to x, ties at one half rounded to the even integer.
BigInt nearest_int(const Rational& x);

// x mod 1 in [0, 1).
Rational frac_part(const Rational& x);

}  // namespace nfrac
