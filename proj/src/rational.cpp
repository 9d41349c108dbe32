#include "nfrac/rational.hpp"

#include <cctype>
#include <cmath>

namespace nfrac {

void Rational::normalize() {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    if (num_ == 0) { den_ = 1; return; }
    BigInt g = big_gcd(big_abs(num_), den_);
    if (g > 1) { num_ /= g; den_ /= g; }
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) { s += '/'; s += den_.str(); }
    return s;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty input");
    auto is_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-') t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw std::invalid_argument("Rational::parse: not an integer or p/q");
        return Rational(BigInt(std::string(text)));
    }
    std::string_view ns = text.substr(0, slash), ds = text.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds)) throw std::invalid_argument("Rational::parse: not an integer or p/q");
    BigInt d{std::string(ds)};
    if (d == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(BigInt(std::string(ns)), std::move(d));
}

double Rational::to_double() const {
    if (num_ == 0) return 0.0;
    // Cancel magnitudes first so huge numerators/denominators do not hit
    // double overflow before the division.
    const double dn = big_to_double(num_);
    const double dd = big_to_double(den_);
    if (std::isfinite(dn) && std::isfinite(dd) && dd != 0.0) return dn / dd;
    const long sn = static_cast<long>(boost::multiprecision::msb(big_abs(num_)));
    const long sd = static_cast<long>(boost::multiprecision::msb(den_));
    const long shift = std::max(sn, sd) - 500;
    const BigInt n2 = num_ >> shift, d2 = den_ >> shift;
    return big_to_double(n2) / big_to_double(d2);
}

Rational dist_nearest_int(const Rational& x) {
    const BigInt r = mod_floor(x.num(), x.den());
    const BigInt other = x.den() - r;
    return Rational(r <= other ? r : other, x.den());
}

BigInt floor_int(const Rational& x) { return div_floor(x.num(), x.den()); }

BigInt nearest_int(const Rational& x) {
    const BigInt f = floor_int(x);
    // Compare the fractional part against 1/2: 2*(num - f*den) <=> den.
    const BigInt twice_rem = 2 * (x.num() - f * x.den());
    if (twice_rem < x.den()) return f;
    if (twice_rem > x.den()) return f + 1;
    return (f % 2 == 0) ? f : f + 1;
}

Rational frac_part(const Rational& x) {
    return Rational(mod_floor(x.num(), x.den()), x.den());
}

}  // namespace nfrac
