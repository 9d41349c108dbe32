#include "nfrac/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <unordered_map>

#include "nfrac/partition.hpp"

namespace nfrac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t q) {
    return static_cast<std::int64_t>(static_cast<unsigned __int128>(x) *
                                     static_cast<unsigned __int128>(y) % static_cast<unsigned __int128>(q));
}

std::int64_t powmod(std::int64_t base, int exp, std::int64_t q) {
    std::int64_t r = 1 % q;
    for (int i = 0; i < exp; ++i) r = mulmod(r, base, q);
    return r;
}

std::int64_t fold_mod(const BigInt& a, std::int64_t q) {
    return mod_floor(a, q).convert_to<std::int64_t>();
}

std::vector<std::complex<double>> roots_of_unity(std::int64_t q) {
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(q));
    for (std::int64_t j = 0; j < q; ++j) {
        const double ang = kTwoPi * static_cast<double>(j) / static_cast<double>(q);
        roots[static_cast<std::size_t>(j)] = {std::cos(ang), std::sin(ang)};
    }
    return roots;
}

// Sweeps evaluate many sums at the same modulus; keep the last table around
// per thread.
const std::vector<std::complex<double>>& cached_roots(std::int64_t q) {
    thread_local std::int64_t last_q = 0;
    thread_local std::vector<std::complex<double>> table;
    if (last_q != q) {
        table = roots_of_unity(q);
        last_q = q;
    }
    return table;
}

void charge_big(WorkBudget& budget, const BigInt& ops, const char* what) {
    if (ops > BigInt(budget.limit)) throw budget_exceeded(std::string(what) + ": work exceeds budget");
    budget.charge(ops.convert_to<std::uint64_t>(), what);
}

void check_modulus(std::int64_t q) {
    if (q < 1) throw std::invalid_argument("expsum: modulus must be >= 1");
    if (q > 10'000'000) throw budget_exceeded("expsum: modulus beyond histogram cap 1e7");
}

// prod_{i=0}^{n-1} (s + i): dominates every partial sum of the signed
// Mobius combination, so counts fit int64 whenever it is < 2^62.
BigInt rising_factorial(std::uint64_t s, int n) {
    BigInt r = 1;
    for (int i = 0; i < n; ++i) r *= BigInt(s + static_cast<std::uint64_t>(i));
    return r;
}

std::uint64_t checked_term_count(std::int64_t L, const BigInt& tuples) {
    const BigInt t = BigInt(L) * tuples;
    if (t > BigInt(UINT64_MAX)) throw budget_exceeded("expsum: term count exceeds 2^64");
    return t.convert_to<std::uint64_t>();
}

double lemma_rhs_bound(const ExpSumParams& p) {
    const double N = static_cast<double>(p.N);
    const double L = static_cast<double>(p.L);
    const double n = static_cast<double>(p.n);
    const double k = static_cast<double>(p.k);
    const double first = L * std::pow(N, n / 2.0 + k / 2.0);
    const double second = L * std::pow(N, n) / std::sqrt(static_cast<double>(p.q));
    return std::pow(2.0, n + k) * std::pow(n, n) * std::max(first, second);
}

void require_coprime(const BigInt& a, std::int64_t q) {
    if (big_gcd(a, BigInt(q)) != 1) throw std::invalid_argument("expsum: need gcd(a, q) = 1");
}

std::vector<int> validated_pattern(const ExpSumParams& p) {
    if (!p.pattern) throw std::invalid_argument("expsum: pattern required");
    const std::vector<int>& pat = *p.pattern;
    if (pat.empty() || static_cast<int>(pat.size()) > p.n)
        throw std::invalid_argument("expsum: pattern length must be in [1, n]");
    int sum = 0;
    for (int r : pat) {
        if (r < 1) throw std::invalid_argument("expsum: pattern entries must be >= 1");
        sum += r;
    }
    if (sum != p.n) throw std::invalid_argument("expsum: pattern must sum to n");
    return pat;
}

ExpSumReport grouped_report(const ExpSumParams& p, const PrimeWindow& P,
                            const std::vector<int>& pattern, WorkBudget& budget) {
    if (P.primes.empty()) throw std::invalid_argument("expsum: empty prime window");
    require_coprime(p.a, p.q);
    if (p.L < 1) throw std::invalid_argument("expsum: L must be >= 1");
    const ResidueHistogram hist = product_residue_histogram(P, pattern, p.a, p.q);
    ExpSumReport rep;
    rep.lhs = abs_l_sum(hist, p.L, budget);
    rep.rhs_bound = lemma_rhs_bound(p);
    rep.ratio = rep.rhs_bound > 0.0 ? rep.lhs / rep.rhs_bound : 0.0;
    rep.condition_ok = validate_conditions(p);
    rep.term_count = checked_term_count(p.L, big_pow(BigInt(P.size()), static_cast<unsigned>(pattern.size())));
    return rep;
}

}  // namespace

bool validate_conditions(const ExpSumParams& p) {
    if (p.n < 1 || p.k < 0 || p.L < 1 || p.N < 1 || p.q < 1) return false;
    const BigInt N(p.N), L(p.L), q(p.q);
    if (L > big_pow(N, static_cast<unsigned>(p.n))) return false;
    if (q > L * big_pow(N, static_cast<unsigned>(p.k))) return false;
    if (big_pow(BigInt(2), static_cast<unsigned>(p.n + p.k + 1)) >= N) return false;
    return true;
}

std::complex<double> orthogonality_sum(const BigInt& a, std::int64_t q, const BigInt& m) {
    check_modulus(q);
    require_coprime(a, q);
    const std::int64_t t = fold_mod(a * m, q);
    const auto& roots = cached_roots(q);
    std::complex<double> acc{0.0, 0.0};
    std::int64_t idx = 0;
    for (std::int64_t r = 1; r <= q; ++r) {
        idx += t;
        if (idx >= q) idx -= q;
        acc += roots[static_cast<std::size_t>(idx)];
    }
    return acc;
}

ResidueHistogram product_residue_histogram(const PrimeWindow& P, const std::vector<int>& pattern,
                                           const BigInt& a, std::int64_t q) {
    check_modulus(q);
    require_coprime(a, q);
    const std::uint64_t s = P.size();
    if (rising_factorial(s, static_cast<int>(pattern.size())) >= (BigInt(1) << 62))
        throw budget_exceeded("product_residue_histogram: counts would overflow int64");

    ResidueHistogram h;
    h.modulus = q;
    h.counts.assign(static_cast<std::size_t>(q), 0);
    h.counts[static_cast<std::size_t>(fold_mod(a, q))] = 1;

    std::vector<std::int64_t> factor(static_cast<std::size_t>(q));
    std::vector<std::int64_t> next(static_cast<std::size_t>(q));
    for (int r : pattern) {
        // per-factor histogram of p^r mod q over the window, kept as its
        // support so the convolution costs O(q * min(q, |P|)) per factor
        std::fill(factor.begin(), factor.end(), 0);
        for (std::int64_t p : P.primes) ++factor[static_cast<std::size_t>(powmod(p % q, r, q))];
        std::vector<std::pair<std::int64_t, std::int64_t>> support;
        for (std::int64_t sres = 0; sres < q; ++sres)
            if (factor[static_cast<std::size_t>(sres)] != 0)
                support.emplace_back(sres, factor[static_cast<std::size_t>(sres)]);
        std::fill(next.begin(), next.end(), 0);
        for (std::int64_t t = 0; t < q; ++t) {
            const std::int64_t ht = h.counts[static_cast<std::size_t>(t)];
            if (ht == 0) continue;
            for (const auto& [sres, g] : support)
                next[static_cast<std::size_t>(mulmod(t, sres, q))] += ht * g;
        }
        h.counts.swap(next);
    }
    return h;
}

ResidueHistogram distinct_residue_histogram(const PrimeWindow& P, int n, const BigInt& a,
                                            std::int64_t q, WorkBudget& budget) {
    check_modulus(q);
    require_coprime(a, q);
    if (rising_factorial(P.size(), n) >= (BigInt(1) << 62))
        throw budget_exceeded("distinct_residue_histogram: counts would overflow int64");

    const std::vector<Partition> partitions = enumerate_partitions(n);
    budget.charge(static_cast<std::uint64_t>(partitions.size()) * static_cast<std::uint64_t>(q),
                  "distinct_residue_histogram");

    // The restricted sum for a partition only sees the multiset of block
    // sizes (one prime per block, raised to the block size), so histograms
    // are memoized by sorted pattern.
    std::map<std::vector<int>, ResidueHistogram> memo;
    ResidueHistogram out;
    out.modulus = q;
    out.counts.assign(static_cast<std::size_t>(q), 0);
    const std::uint64_t conv_cost = static_cast<std::uint64_t>(q) *
                                    std::min<std::uint64_t>(static_cast<std::uint64_t>(q), P.size() + 1);
    for (const Partition& part : partitions) {
        std::vector<int> pattern;
        pattern.reserve(part.blocks.size());
        for (const auto& b : part.blocks) pattern.push_back(static_cast<int>(b.size()));
        std::sort(pattern.begin(), pattern.end());
        auto it = memo.find(pattern);
        if (it == memo.end()) {
            budget.charge(pattern.size() * conv_cost, "distinct_residue_histogram");
            it = memo.emplace(pattern, product_residue_histogram(P, pattern, a, q)).first;
        }
        const ResidueHistogram& hist = it->second;
        for (std::int64_t t = 0; t < q; ++t)
            out.counts[static_cast<std::size_t>(t)] += part.mu * hist.counts[static_cast<std::size_t>(t)];
    }
    return out;
}

double abs_l_sum_serial(const ResidueHistogram& hist, std::int64_t L, WorkBudget& budget) {
    if (L < 1) throw std::invalid_argument("abs_l_sum: L must be >= 1");
    const std::int64_t q = hist.modulus;
    budget.charge(static_cast<std::uint64_t>(L) * static_cast<std::uint64_t>(q), "abs_l_sum");
    const auto roots = roots_of_unity(q);
    double total = 0.0;
    for (std::int64_t l = 1; l <= L; ++l) {
        const std::int64_t stride = l % q;
        std::complex<double> acc{0.0, 0.0};
        std::int64_t idx = 0;
        for (std::int64_t t = 0; t < q; ++t) {
            const std::int64_t c = hist.counts[static_cast<std::size_t>(t)];
            if (c != 0) acc += static_cast<double>(c) * roots[static_cast<std::size_t>(idx)];
            idx += stride;
            if (idx >= q) idx -= q;
        }
        total += std::abs(acc);
    }
    return total;
}

double abs_l_sum(const ResidueHistogram& hist, std::int64_t L, WorkBudget& budget) {
    if (L < 1) throw std::invalid_argument("abs_l_sum: L must be >= 1");
    const std::int64_t q = hist.modulus;
    budget.charge(static_cast<std::uint64_t>(L) * static_cast<std::uint64_t>(q), "abs_l_sum");
    const auto roots = roots_of_unity(q);
    std::vector<double> per_l(static_cast<std::size_t>(L));
#pragma omp parallel for schedule(static)
    for (std::int64_t l = 1; l <= L; ++l) {
        const std::int64_t stride = l % q;
        std::complex<double> acc{0.0, 0.0};
        std::int64_t idx = 0;
        for (std::int64_t t = 0; t < q; ++t) {
            const std::int64_t c = hist.counts[static_cast<std::size_t>(t)];
            if (c != 0) acc += static_cast<double>(c) * roots[static_cast<std::size_t>(idx)];
            idx += stride;
            if (idx >= q) idx -= q;
        }
        per_l[static_cast<std::size_t>(l - 1)] = std::abs(acc);
    }
    // Accumulate in index order: the result matches the serial kernel exactly
    // for any thread count.
    double total = 0.0;
    for (double v : per_l) total += v;
    return total;
}

ExpSumReport lemma1_lhs(const ExpSumParams& p, const PrimeWindow& P, WorkBudget& budget) {
    if (p.pattern) throw std::invalid_argument("lemma1_lhs: pattern not allowed, use lemma2_lhs");
    return grouped_report(p, P, std::vector<int>(static_cast<std::size_t>(p.n), 1), budget);
}

ExpSumReport lemma2_lhs(const ExpSumParams& p, const PrimeWindow& P, WorkBudget& budget) {
    return grouped_report(p, P, validated_pattern(p), budget);
}

double lemma_lhs_direct(const ExpSumParams& p, const PrimeWindow& P, WorkBudget& budget) {
    if (P.primes.empty()) throw std::invalid_argument("expsum: empty prime window");
    require_coprime(p.a, p.q);
    const std::vector<int> pattern =
        p.pattern ? validated_pattern(p) : std::vector<int>(static_cast<std::size_t>(p.n), 1);
    const std::size_t m = pattern.size();
    const std::int64_t q = p.q;
    check_modulus(q);

    const BigInt tuples = big_pow(BigInt(P.size()), static_cast<unsigned>(m));
    charge_big(budget, BigInt(p.L) * tuples, "lemma_lhs_direct");

    std::vector<std::int64_t> fres(P.size() * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < P.size(); ++j)
            fres[i * P.size() + j] = powmod(P.primes[j] % q, pattern[i], q);

    const std::int64_t a0 = fold_mod(p.a, q);
    double total = 0.0;
    std::vector<std::size_t> choice(m, 0);
    std::vector<std::int64_t> prefix(m + 1);
    for (std::int64_t l = 1; l <= p.L; ++l) {
        prefix[0] = mulmod(a0, l % q, q);
        std::fill(choice.begin(), choice.end(), 0);
        for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = mulmod(prefix[i], fres[i * P.size()], q);
        std::complex<double> acc{0.0, 0.0};
        for (;;) {
            const double ang = kTwoPi * static_cast<double>(prefix[m]) / static_cast<double>(q);
            acc += std::complex<double>{std::cos(ang), std::sin(ang)};
            std::size_t pos = m;
            while (pos > 0 && choice[pos - 1] + 1 == P.size()) --pos;
            if (pos == 0) break;
            ++choice[pos - 1];
            for (std::size_t i = pos - 1; i < m; ++i) {
                if (i > pos - 1) choice[i] = 0;
                prefix[i + 1] = mulmod(prefix[i], fres[i * P.size() + choice[i]], q);
            }
        }
        total += std::abs(acc);
    }
    return total;
}

DistinctSumResult distinct_sum_S(const BigInt& a, std::int64_t q, int n, std::int64_t L,
                                 const PrimeWindow& P, WorkBudget& budget) {
    DistinctSumResult res;
    res.histogram = distinct_residue_histogram(P, n, a, q, budget);
    res.value = abs_l_sum(res.histogram, L, budget);
    BigInt falling = 1;
    for (int i = 0; i < n; ++i) falling *= BigInt(static_cast<std::int64_t>(P.size()) - i);
    if (falling < 0) falling = 0;
    res.term_count = checked_term_count(L, falling);
    const double Pn = static_cast<double>(P.size());
    res.threshold_quadratic =
        (std::pow(Pn, n) - static_cast<double>(n) * static_cast<double>(n) * std::pow(Pn, n - 1)) / 6.0;
    res.threshold_binomial =
        (std::pow(Pn, n) - 0.5 * static_cast<double>(n) * static_cast<double>(n - 1) * std::pow(Pn, n - 1)) /
        6.0;
    return res;
}

double distinct_sum_S_direct(const BigInt& a, std::int64_t q, int n, std::int64_t L,
                             const PrimeWindow& P, WorkBudget& budget) {
    check_modulus(q);
    require_coprime(a, q);
    const std::size_t s = P.size();
    const BigInt tuples = big_pow(BigInt(s), static_cast<unsigned>(n));
    charge_big(budget, BigInt(L) * tuples, "distinct_sum_S_direct");

    const std::int64_t a0 = fold_mod(a, q);
    double total = 0.0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n));
    for (std::int64_t l = 1; l <= L; ++l) {
        std::complex<double> acc{0.0, 0.0};
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            bool distinct = true;
            for (int i = 0; i < n && distinct; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (idx[static_cast<std::size_t>(i)] == idx[static_cast<std::size_t>(j)]) {
                        distinct = false;
                        break;
                    }
            if (distinct) {
                std::int64_t r = mulmod(a0, l % q, q);
                for (int i = 0; i < n; ++i)
                    r = mulmod(r, P.primes[idx[static_cast<std::size_t>(i)]] % q, q);
                const double ang = kTwoPi * static_cast<double>(r) / static_cast<double>(q);
                acc += std::complex<double>{std::cos(ang), std::sin(ang)};
            }
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == s) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
        total += std::abs(acc);
    }
    return total;
}

DrAudit dr_coefficient_audit(std::int64_t L, const PrimeWindow& P, int k, int n,
                             WorkBudget& budget) {
    if (k < 0 || n < 1 || L < 1) throw std::invalid_argument("dr_coefficient_audit: bad arguments");
    charge_big(budget, BigInt(L) * big_pow(BigInt(P.size()), static_cast<unsigned>(k)),
               "dr_coefficient_audit");

    std::unordered_map<std::uint64_t, std::uint64_t> dr;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    for (std::int64_t l = 1; l <= L; ++l) {
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            unsigned __int128 r = static_cast<unsigned __int128>(l);
            for (int i = 0; i < k; ++i)
                r *= static_cast<unsigned __int128>(P.primes[idx[static_cast<std::size_t>(i)]]);
            if (r > static_cast<unsigned __int128>(UINT64_MAX))
                throw budget_exceeded("dr_coefficient_audit: product exceeds 2^64");
            ++dr[static_cast<std::uint64_t>(r)];
            if (k == 0) break;
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == P.size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    DrAudit audit;
    for (const auto& [r, c] : dr) audit.max_dr = std::max(audit.max_dr, c);
    audit.bound = big_pow(BigInt(2), static_cast<unsigned>(n + k + 1)) *
                  (k == 0 ? BigInt(1) : big_pow(BigInt(k), static_cast<unsigned>(k)));
    audit.ok = BigInt(audit.max_dr) <= audit.bound;
    return audit;
}

VinogradovReport vinogradov_sum(const BigInt& a, std::int64_t q, std::int64_t N) {
    if (q < 1 || N < 1) throw std::invalid_argument("vinogradov_sum: need q >= 1, N >= 1");
    if (q > 1'000'000) throw budget_exceeded("vinogradov_sum: q beyond cap 1e6");
    require_coprime(a, q);
    const std::int64_t a0 = fold_mod(a, q);
    Rational lhs(0);
    for (std::int64_t r = 1; r <= q; ++r) {
        const std::int64_t rp = mulmod(a0, r % q, q);
        if (rp == 0) {
            lhs += Rational(N);
            continue;
        }
        const std::int64_t s = std::min(rp, q - rp);
        // min(N, q/s) decided exactly: N <= q/s  <=>  N*s <= q
        lhs += (N * s <= q) ? Rational(N) : Rational(q, s);
    }
    VinogradovReport rep;
    rep.lhs = lhs;
    rep.bound = static_cast<double>(N) +
                2.0 * static_cast<double>(q) * (1.0 + std::log(static_cast<double>(q)));
    rep.ratio = rep.lhs.to_double() / rep.bound;
    return rep;
}

EtCheck erdos_turan_check(const std::vector<Rational>& points, std::int64_t L) {
    if (L < 1) throw std::invalid_argument("erdos_turan_check: L must be >= 1");
    EtCheck chk;
    for (std::int64_t l = 1; l <= L; ++l) {
        std::complex<double> acc{0.0, 0.0};
        for (const Rational& x : points) {
            // l*x mod 1, reduced exactly before going to doubles
            const BigInt num = mod_floor(BigInt(l) * x.num(), x.den());
            const double ang = kTwoPi * big_to_double(num) / big_to_double(x.den());
            acc += std::complex<double>{std::cos(ang), std::sin(ang)};
        }
        chk.S += std::abs(acc);
    }
    chk.threshold = static_cast<double>(points.size()) / 6.0;
    chk.conclusion = chk.S <= chk.threshold;
    return chk;
}

}  // namespace nfrac
