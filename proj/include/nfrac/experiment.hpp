#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfrac/budget.hpp"
#include "nfrac/expsum.hpp"
#include "nfrac/rational.hpp"
#include "nfrac/search.hpp"

namespace nfrac {

// "p/q", a plain integer, or "convergent:<name>:<min_denominator>" with name
// in {golden, sqrt2, e, pi}: the first convergent of the constant whose
// denominator reaches min_denominator. pi uses a frozen quotient table; the
// others generate their quotients from the known patterns.
Rational parse_alpha(const std::string& spec);

// ---------------------------------------------------------------------------
// Seeded audits. Every draw comes from SplitMix64(seed), so a (config, seed)
// pair fixes the whole report.

// Point sets with every ||x_j|| >= 1/L: J in [1,200], L in [2,50], points
// k/10^6 with k uniform in [ceil(10^6/L), 10^6 - ceil(10^6/L)].
struct EtAuditRow {
    std::int64_t trial;
    int J;
    std::int64_t L;
    double S;
    double threshold;
    bool exceeds;  // S > J/6 (the inequality's guaranteed direction)
};
std::vector<EtAuditRow> et_audit(std::int64_t trials, std::uint64_t seed);

// q in [1, q_max], N in [1, N_max], a walked up from a seed draw until
// coprime with q; checks the exact sum against N + 2q(1 + ln q).
struct VinAuditRow {
    std::int64_t trial;
    std::int64_t a, q, N;
    Rational lhs;
    double bound;
    double ratio;
    bool ok;
};
std::vector<VinAuditRow> vinogradov_audit(std::int64_t trials, std::uint64_t seed,
                                          std::int64_t q_max, std::int64_t N_max);

// Histogram-grouped evaluation vs direct term-by-term summation, drawn with
// |P|^n <= 10^6 and L capped so the direct path stays affordable. kind cycles
// lemma1 / lemma2 (random composition pattern) / distinct.
struct HistAuditRow {
    std::int64_t draw;
    std::string kind;
    int n, k;
    std::int64_t q;
    std::int64_t a;
    std::int64_t L;
    std::int64_t window_N;
    std::uint64_t window_size;
    double grouped;
    double direct;
    double abs_err;
    bool ok;  // |grouped - direct| <= 1e-8 * max(1, |direct|)
};
std::vector<HistAuditRow> expsum_hist_audit(std::int64_t draws, std::uint64_t seed,
                                            std::uint64_t budget_per_draw);

// The full d_r grid: n in {1,2,3}, k in {0,1,2}, L in [1,30], N in {20,40,60}.
struct DrGridRow {
    int n, k;
    std::int64_t L, N;
    std::uint64_t max_dr;
    BigInt bound;
    bool ok;
};
std::vector<DrGridRow> dr_grid_audit(std::uint64_t budget_per_cell);

// All q <= q_max, all a in [1,q] coprime to q, m in [-m_range, m_range];
// per-q maximum of |sum - expected| against tolerance 1e-9 * q.
struct OrthoSweepRow {
    std::int64_t q;
    double max_abs_err;
    bool ok;
};
std::vector<OrthoSweepRow> orthogonality_sweep(std::int64_t q_max, std::int64_t m_range);

// ---------------------------------------------------------------------------

struct ExperimentConfig {
    std::string subcommand;
    std::vector<std::string> alphas;
    std::string n_spec = "2";     // "2" or "1..10"
    std::int64_t N = 0;           // single-N subcommands
    std::string N_range;          // "40..200" or "40..200:20"
    std::string epsilon = "1/2";
    std::string phi;              // empty: kappa(n) for theorem1, 7/4 for theorem2
    std::string X;                // corollary2-probe height
    std::string oracle_class = "primes";  // primes | all
    std::string mode = "theorem1";
    std::uint64_t seed = 1;
    std::int64_t trials = 0;
    std::string check = "hist";   // expsum-audit: hist | dr | ortho
    std::string format;           // csv | json; empty picks per subcommand
    std::string output;           // empty: stdout
    std::uint64_t work_budget = kDefaultWorkBudget;
    bool timing = false;          // wall_ms columns stay empty when off
};

// Renders the whole report into `report` and returns the exit code:
// 0 success, 1 invalid configuration, 2 budget exhausted. On failure `report`
// carries a one-line message. Identical (config, seed) produce identical
// bytes.
int run_experiment(const ExperimentConfig& cfg, std::string& report);

// run_experiment plus writing to cfg.output (or stdout).
int run_experiment_to_output(const ExperimentConfig& cfg);

}  // namespace nfrac
