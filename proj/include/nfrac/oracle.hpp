#pragma once

#include "nfrac/budget.hpp"
#include "nfrac/prime_window.hpp"
#include "nfrac/search.hpp"

namespace nfrac {

// Tuple universe for the brute-force optimum: n distinct primes in [N/2, N],
// or n integers in [1, N].
struct DenomClass {
    enum class Kind { primes_in_window, all_up_to_N } kind;
    std::int64_t N;
    int n;
};

// With the denominators fixed, the reachable values {sum a_i/q_i} are exactly
// (1/M) Z for M = lcm(q_i) — the gcd of the cofactors M/q_i is 1 because each
// prime's maximal exponent cancels in some cofactor. So the optimal error is
// ||alpha M|| / M, realized by back-substituted numerators.
struct FixedDenomBest {
    Rational error;
    std::vector<BigInt> numerators;
};
FixedDenomBest best_error_for_denoms(const Rational& alpha, const std::vector<BigInt>& denoms);

// Global minimum of ||alpha M||/M over the class, deduplicated by achieved
// lcm; ties go to the smaller M, then the lexicographically smaller tuple.
// Deliberately serial and simple — this is the trusted reference.
ApproxResult best_multi_approx(const Rational& alpha, const DenomClass& cls, WorkBudget& budget);

// phi_achieved with error = 1/(q N^phi_achieved); +infinity when error = 0.
// Display only.
double achieved_exponent(const BigInt& q, const Rational& error, std::int64_t N);

}  // namespace nfrac
