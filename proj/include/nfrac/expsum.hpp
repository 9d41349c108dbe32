#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "nfrac/budget.hpp"
#include "nfrac/prime_window.hpp"
#include "nfrac/rational.hpp"

namespace nfrac {

// Parameters of one exponential-sum evaluation: the phase is
// l * q_1^{r_1} ... q_m^{r_m} * a/q with the q_i drawn from a prime window.
// Without a pattern the exponents are all 1 and m = n.
struct ExpSumParams {
    BigInt a = 0;
    std::int64_t q = 1;  // gcd(a, q) = 1
    int n = 1;
    int k = 0;
    std::int64_t L = 1;
    std::int64_t N = 1;
    std::optional<std::vector<int>> pattern;  // r_1..r_m, sum = n, each >= 1
};

// L <= N^n, q <= L N^k, 2^{n+k+1} < N — the regime every sum bound assumes.
bool validate_conditions(const ExpSumParams& p);

// One evaluation, with the majorant reported at implied constant 1. The
// asymptotic inequality itself is never asserted; ratio is data.
struct ExpSumReport {
    double lhs = 0.0;
    double rhs_bound = 0.0;
    double ratio = 0.0;
    bool condition_ok = false;
    std::uint64_t term_count = 0;
};

// Exact tuple counts grouped by residue class of the phase numerator:
// counts[r] = #{tuples : a * prod q_i^{r_i} == r (mod q)}. Counts are signed
// so the same container carries Mobius-combined (distinct-tuple) histograms.
struct ResidueHistogram {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> counts;

    std::int64_t total() const {
        std::int64_t t = 0;
        for (std::int64_t c : counts) t += c;
        return t;
    }
};

// sum_{r=1}^{q} e(a m r / q): q when q | m, else 0 (geometric series). The
// value is summed term by term so the cancellation itself is exercised.
std::complex<double> orthogonality_sum(const BigInt& a, std::int64_t q, const BigInt& m);

// Histogram of a * q_1^{r_1} ... q_m^{r_m} mod q over tuples from P^m,
// built by iterated multiplicative convolution of per-factor histograms:
// O(m |P| + m q min(q, |P|)) instead of |P|^m.
ResidueHistogram product_residue_histogram(const PrimeWindow& P, const std::vector<int>& pattern,
                                           const BigInt& a, std::int64_t q);

// Mobius-combined histogram counting only tuples with pairwise distinct
// entries (n unpatterned factors). Exact signed combination; the result is
// provably nonnegative.
ResidueHistogram distinct_residue_histogram(const PrimeWindow& P, int n, const BigInt& a,
                                            std::int64_t q, WorkBudget& budget);

// sum_{l=1}^{L} | sum_t counts[t] e(l t / q) |. The per-l inner sums are
// independent; the parallel kernel fills a per-l table and accumulates it in
// index order, so results are identical to the serial kernel bit for bit.
double abs_l_sum(const ResidueHistogram& hist, std::int64_t L, WorkBudget& budget);
double abs_l_sum_serial(const ResidueHistogram& hist, std::int64_t L, WorkBudget& budget);

// sum_{l<=L} | sum_{q_1..q_n in P} e(l q_1...q_n a/q) |, grouped evaluation.
ExpSumReport lemma1_lhs(const ExpSumParams& p, const PrimeWindow& P, WorkBudget& budget);

// Same with powered factors q_1^{r_1} ... q_m^{r_m}; pattern required.
ExpSumReport lemma2_lhs(const ExpSumParams& p, const PrimeWindow& P, WorkBudget& budget);

// Serial term-by-term references for the two sums above (tuple odometer, no
// grouping). Kept for cross-validation and benchmarking.
double lemma_lhs_direct(const ExpSumParams& p, const PrimeWindow& P, WorkBudget& budget);

// Distinct-tuple variant of lemma1_lhs, via the partition inversion, plus the
// equidistribution thresholds (|P|^n - n^2 |P|^{n-1})/6 from the displayed
// form and the binomial(n,2) variant from the text.
struct DistinctSumResult {
    double value = 0.0;
    ResidueHistogram histogram;
    std::uint64_t term_count = 0;   // L * (#distinct tuples)
    double threshold_quadratic = 0.0;
    double threshold_binomial = 0.0;
};
DistinctSumResult distinct_sum_S(const BigInt& a, std::int64_t q, int n, std::int64_t L,
                                 const PrimeWindow& P, WorkBudget& budget);
double distinct_sum_S_direct(const BigInt& a, std::int64_t q, int n, std::int64_t L,
                             const PrimeWindow& P, WorkBudget& budget);

// d_r = #{(l, q_1..q_k) : l <= L, q_i in P, l q_1...q_k = r} by direct
// enumeration, checked against 2^{n+k+1} k^k (0^0 = 1).
struct DrAudit {
    std::uint64_t max_dr = 0;
    BigInt bound = 0;
    bool ok = false;
};
DrAudit dr_coefficient_audit(std::int64_t L, const PrimeWindow& P, int k, int n,
                             WorkBudget& budget);

// sum_{r=1}^{q} min(N, 1 / ||a r / q||), exactly, term = N when a r == 0
// (mod q). Reported against the explicit majorant N + 2q(1 + ln q).
struct VinogradovReport {
    Rational lhs;
    double bound = 0.0;
    double ratio = 0.0;
};
VinogradovReport vinogradov_sum(const BigInt& a, std::int64_t q, std::int64_t N);

// S = sum_{l<=L} |sum_j e(l x_j)| with J = #points and threshold J/6.
// conclusion true means S <= J/6, i.e. some point must lie within 1/L of an
// integer; the converse is not claimed.
struct EtCheck {
    double S = 0.0;
    double threshold = 0.0;
    bool conclusion = false;
};
EtCheck erdos_turan_check(const std::vector<Rational>& points, std::int64_t L);

}  // namespace nfrac
