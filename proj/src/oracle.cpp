#include "nfrac/oracle.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "nfrac/partial_fraction.hpp"

namespace nfrac {

namespace {

bool pairwise_coprime(const std::vector<BigInt>& qs) {
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = i + 1; j < qs.size(); ++j)
            if (big_gcd(qs[i], qs[j]) != 1) return false;
    return true;
}

// Solve sum a_i (M/q_i) = b when the q_i share factors: extended-gcd chain
// over the cofactors (their gcd is 1), then each a_i is peeled into [0, q_i)
// with the excess folded into the first term.
std::vector<BigInt> peel_numerators(const BigInt& b, const std::vector<BigInt>& qs,
                                    const BigInt& M) {
    std::vector<BigInt> cof(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) cof[i] = M / qs[i];
    std::vector<BigInt> coeff(qs.size(), 0);
    BigInt g = cof[0];
    coeff[0] = 1;
    for (std::size_t i = 1; i < qs.size(); ++i) {
        const ExtGcd e = extended_gcd(g, cof[i]);
        for (std::size_t j = 0; j < i; ++j) coeff[j] *= e.x;
        coeff[i] = e.y;
        g = e.g;
    }
    if (g != 1) throw std::logic_error("peel_numerators: cofactor gcd is not 1");
    std::vector<BigInt> a(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) a[i] = coeff[i] * b;
    BigInt carry = 0;
    for (std::size_t i = 1; i < qs.size(); ++i) {
        const BigInt r = mod_floor(a[i], qs[i]);
        carry += (a[i] - r) / qs[i];
        a[i] = r;
    }
    a[0] += carry * qs[0];
    return a;
}

double big_log(const BigInt& x) {
    if (x <= 0) throw std::invalid_argument("big_log: nonpositive");
    const double d = big_to_double(x);
    if (std::isfinite(d) && d > 0.0) return std::log(d);
    const unsigned bits = boost::multiprecision::msb(x);
    const double mant = BigInt(x >> (bits - 52)).convert_to<double>();
    return std::log(mant) + static_cast<double>(bits - 52) * std::numbers::ln2;
}

}  // namespace

FixedDenomBest best_error_for_denoms(const Rational& alpha, const std::vector<BigInt>& denoms) {
    if (denoms.empty()) throw std::invalid_argument("best_error_for_denoms: no denominators");
    BigInt M = 1;
    for (const BigInt& q : denoms) {
        if (q < 1) throw std::invalid_argument("best_error_for_denoms: denominator < 1");
        M = big_lcm(M, q);
    }
    const Rational scaled = alpha * Rational(M);
    const BigInt b = nearest_int(scaled);
    FixedDenomBest out;
    out.error = dist_nearest_int(scaled) / Rational(M);
    if (pairwise_coprime(denoms)) {
        PartialFractionDecomposition pf = crt_partial_fractions(b, denoms);
        for (auto& [ai, qi] : pf.terms) out.numerators.push_back(std::move(ai));
        out.numerators[0] += pf.integer_part * denoms[0];
        // crt split is over prod q_i; rescale is only valid when lcm == prod,
        // which pairwise coprimality guarantees
    } else {
        out.numerators = peel_numerators(b, denoms, M);
    }
    return out;
}

ApproxResult best_multi_approx(const Rational& alpha, const DenomClass& cls, WorkBudget& budget) {
    if (cls.n < 1) throw std::invalid_argument("best_multi_approx: n must be >= 1");
    const BigInt A = alpha.num();
    const BigInt B = alpha.den();

    std::vector<std::int64_t> universe;
    bool distinct_required = false;
    if (cls.kind == DenomClass::Kind::primes_in_window) {
        universe = sieve_window(cls.N, BigInt(1)).primes;
        distinct_required = true;
        if (static_cast<int>(universe.size()) < cls.n)
            throw std::invalid_argument("best_multi_approx: window too small");
    } else {
        if (cls.N < 1) throw std::invalid_argument("best_multi_approx: N must be >= 1");
        universe.resize(static_cast<std::size_t>(cls.N));
        for (std::int64_t i = 0; i < cls.N; ++i) universe[static_cast<std::size_t>(i)] = i + 1;
    }

    // tuple count: C(s, n) distinct or C(s+n-1, n) non-decreasing
    {
        BigInt count = 1;
        const std::int64_t s = static_cast<std::int64_t>(universe.size());
        for (int i = 0; i < cls.n; ++i) {
            count *= BigInt(distinct_required ? s - i : s + cls.n - 1 - i);
            count /= BigInt(i + 1);
        }
        if (count > BigInt(budget.limit)) throw budget_exceeded("best_multi_approx: tuple universe too large");
        budget.charge(count.convert_to<std::uint64_t>(), "best_multi_approx");
    }

    std::set<BigInt> seen;
    bool have_best = false;
    BigInt best_v, best_M;
    std::vector<std::int64_t> best_tuple;

    std::vector<std::size_t> idx(static_cast<std::size_t>(cls.n));
    for (int i = 0; i < cls.n; ++i)
        idx[static_cast<std::size_t>(i)] = distinct_required ? static_cast<std::size_t>(i) : 0;
    const std::size_t s = universe.size();
    std::uint64_t scanned = 0;
    for (;;) {
        BigInt M = 1;
        for (std::size_t i : idx) M = big_lcm(M, BigInt(universe[i]));
        ++scanned;
        if (seen.insert(M).second) {
            const BigInt t = mod_floor(A * M, B);
            const BigInt v = std::min(t, BigInt(B - t));
            const bool better = !have_best || [&] {
                const BigInt lhs = v * best_M, rhs = best_v * M;
                if (lhs != rhs) return lhs < rhs;
                return M < best_M;
            }();
            if (better) {
                have_best = true;
                best_v = v;
                best_M = M;
                best_tuple.clear();
                for (std::size_t i : idx) best_tuple.push_back(universe[i]);
            }
        }
        // lex successor over sorted tuples (strictly or weakly increasing)
        int d = cls.n - 1;
        if (distinct_required) {
            while (d >= 0 && idx[static_cast<std::size_t>(d)] == s - static_cast<std::size_t>(cls.n - d)) --d;
            if (d < 0) break;
            ++idx[static_cast<std::size_t>(d)];
            for (int j = d + 1; j < cls.n; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        } else {
            while (d >= 0 && idx[static_cast<std::size_t>(d)] == s - 1) --d;
            if (d < 0) break;
            ++idx[static_cast<std::size_t>(d)];
            for (int j = d + 1; j < cls.n; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(d)];
        }
    }

    std::vector<BigInt> dens(best_tuple.begin(), best_tuple.end());
    FixedDenomBest fixed = best_error_for_denoms(alpha, dens);
    ApproxResult r;
    r.denominators = std::move(dens);
    r.numerators = std::move(fixed.numerators);
    r.error = fixed.error;
    r.target_bound = fixed.error;  // the oracle's own optimum is its target
    r.met_target = true;
    r.L = 1;
    r.branch = Branch::oracle;
    r.tuples_scanned = scanned;
    return r;
}

double achieved_exponent(const BigInt& q, const Rational& error, std::int64_t N) {
    if (error.is_zero()) return std::numeric_limits<double>::infinity();
    if (error.is_negative()) throw std::invalid_argument("achieved_exponent: negative error");
    // error = 1/(q N^phi)  =>  phi = -ln(q * error) / ln N
    const double ln_qe = big_log(q * error.num()) - big_log(error.den());
    return -ln_qe / std::log(static_cast<double>(N));
}

}  // namespace nfrac
