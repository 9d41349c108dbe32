#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfrac/budget.hpp"
#include "nfrac/partial_fraction.hpp"
#include "nfrac/prime_window.hpp"
#include "nfrac/rational.hpp"

namespace nfrac {

// kappa(n) = (3n - floor(n/3) - 1) / 4, the achievable exponent for
// approximation by n fractions with distinct prime denominators.
Rational kappa(int n);

// n <= eps * ln N / (6 ln ln N), the regime constraint of the n-fraction
// theorem. Advisory only: desk-scale N sits far outside it.
struct RegimeCheck {
    bool holds = false;
    bool small_N = false;  // N < 16: ln ln N <= 0, regime undefined
    double bound = 0.0;
};
RegimeCheck n_bound_check(int n, std::int64_t N, const Rational& epsilon);

// floor(q * N^(phi - n)) + 1, computed exactly through integer r-th roots.
BigInt choose_L(const BigInt& q, std::int64_t N, const Rational& phi, int n);

enum class SearchMode { theorem1, theorem2 };

// Validated hypothesis for a search: gcd(a, q) = 1, q >= 1 and
// |alpha - a/q| <= 1/(q N^phi), checked exactly at construction. phi must lie
// in [n/2, n]; theorem2 additionally needs n = 3 and phi in [3/2, 2].
struct SearchParams {
    Rational alpha;
    BigInt a;
    BigInt q;
    std::int64_t N = 0;
    int n = 0;
    Rational epsilon;
    Rational phi;
    SearchMode mode = SearchMode::theorem1;

    static SearchParams validated(Rational alpha, BigInt a, BigInt q, std::int64_t N, int n,
                                  Rational epsilon, Rational phi,
                                  SearchMode mode = SearchMode::theorem1);
};

enum class Branch { trivial, et_search, exhausted, oracle };

const char* branch_name(Branch b);

// A certified n-fraction approximation: error is the exact value
// |alpha - sum a_i/q_i| and met_target its exact comparison against
// target_bound. Everything here can be recomputed from alpha and the
// numerator/denominator lists alone.
struct ApproxResult {
    std::vector<BigInt> denominators;
    std::vector<BigInt> numerators;
    Rational error;
    Rational target_bound;
    BigInt L = 1;
    bool met_target = false;
    Branch branch = Branch::trivial;

    std::uint64_t tuples_scanned = 0;
    std::uint64_t tuples_skipped = 0;

    Rational approximant() const {
        Rational v(0);
        for (std::size_t i = 0; i < denominators.size(); ++i)
            v += Rational(numerators[i], denominators[i]);
        return v;
    }
};

// Rounding fallback: take the n largest window primes, M = prod q_i, and the
// nearest integer b to alpha*M. error <= 1/(2M) <= 2^(n-1)/N^n.
// target_bound is that 1/(2M) guarantee; searches delegating here override it
// with their own target.
ApproxResult trivial_case(const Rational& alpha, std::int64_t N, int n, const PrimeWindow& P);

// Constructive search for n distinct window primes. Early-stops at the first
// tuple (lexicographic over sorted P) with ||q_1...q_n a/q|| < 1/L, where L
// is chosen at exponent phi - eps/2; on a full scan it returns the tuple
// minimizing the exact error |a/q - b/(q_1...q_n)|, ties to the smaller
// product then the lex-smaller tuple. Certificates are recomputed against
// alpha, never a/q. Both a serial and an OpenMP scan exist and return
// identical results.
ApproxResult theorem1_search(const SearchParams& p, const PrimeWindow& P, WorkBudget& budget);
ApproxResult theorem1_search_serial(const SearchParams& p, const PrimeWindow& P,
                                    WorkBudget& budget);

// n = 3 variant: two distinct window primes plus any integer q_3 in [N/2, N]
// coprime to q_1 q_2 (non-coprime candidates are counted as skipped).
ApproxResult theorem2_search(const SearchParams& p, const PrimeWindow& P, WorkBudget& budget);

// Exact sum of fractions as one reduced fraction A/Q.
std::pair<BigInt, BigInt> combine_fractions(const std::vector<std::pair<BigInt, BigInt>>& parts);

// Number of distinct prime factors, by trial division; Q <= 10^18.
int omega(const BigInt& Q);

// One run of the fraction-combination probe: N = ceil(X^(1/kappa(n))), a
// theorem-1 search at the steepest quarter-grid exponent the hypothesis
// supports, results combined into A/Q and measured against Q <= X^(n/kappa)
// and error <= 1/(q X^(1-eps)).
struct Corollary2Report {
    std::int64_t N = 0;
    Rational phi_used;
    ApproxResult search;
    BigInt A, Q;
    int omega_Q = 0;
    bool Q_within_bound = false;      // Q <= X^(n/kappa(n)), exact
    bool error_within_bound = false;  // error <= 1/(q X^(1-eps)), exact
};
Corollary2Report corollary2_probe(const Rational& alpha, const BigInt& a, const BigInt& q,
                                  const BigInt& X, int n, const Rational& epsilon,
                                  WorkBudget& budget);

// One row of a conjecture scan: a theorem-1 search at a given phi with the
// hypothesis manufactured from alpha's convergents at height N^phi.
struct ScanRow {
    Rational alpha;
    BigInt a, q;
    std::int64_t N = 0;
    int n = 0;
    Rational phi;
    Rational epsilon;
    ApproxResult result;
    std::int64_t wall_ms = -1;  // -1: not measured
};

// phi-grid scan (n/2 .. n in steps of 1/4) for each alpha and N. Rows come
// out in (alpha, N, phi) order; the largest phi met per (alpha, N) is the
// empirical exponent. Timing is off by default so reports stay reproducible.
std::vector<ScanRow> conjecture_scan(const std::vector<Rational>& alphas,
                                     const std::vector<std::int64_t>& Ns, int n,
                                     const Rational& epsilon, WorkBudget& budget,
                                     bool timing = false);

// Exact recheck of a result: error and met_target recomputable, CRT
// round-trip holds. Returns an empty string on success, else a description.
std::string verify_certificate(const Rational& alpha, const ApproxResult& r);

}  // namespace nfrac
