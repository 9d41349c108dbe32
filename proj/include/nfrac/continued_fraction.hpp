#pragma once

#include <vector>

#include "nfrac/rational.hpp"

namespace nfrac {

// Finite continued fraction [a0; a1, a2, ...] of a rational number together
// with all convergents p_k/q_k. Canonical form: the last partial quotient is
// >= 2 whenever the expansion has more than one term, so expansions are
// unique. a0 may be any integer; every later quotient is >= 1.
struct ContinuedFraction {
    std::vector<BigInt> partial_quotients;
    std::vector<Rational> convergents;
};

// Full expansion of x by the Euclidean algorithm.
ContinuedFraction continued_fraction(const Rational& x);

// The convergent a/q of alpha with the largest denominator q <= X (X >= 1).
// This is the classical best rational approximation with bounded denominator
// coming from the convergent list; gcd(a, q) = 1 and, unless alpha itself has
// denominator <= X, |alpha - a/q| <= 1/(q * q_next) with q_next the following
// convergent denominator.
struct BestApprox {
    BigInt a;
    BigInt q;
};
BestApprox best_single_approx(const Rational& alpha, const BigInt& X);

}  // namespace nfrac
