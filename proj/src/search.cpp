#include "nfrac/search.hpp"

#include <atomic>
#include <chrono>
#include <cmath>

#include "nfrac/continued_fraction.hpp"

namespace nfrac {

namespace {

struct Exp {
    long long p, r;  // exponent p/r, r >= 1
};

// Exponents become exact integer powers q^r, N^p; keep them small enough
// that the root extractions stay in the sub-second range.
Exp exp_of(const Rational& x) {
    if (x.den() > BigInt(5'000) || big_abs(x.num()) > BigInt(100'000))
        throw std::invalid_argument("exponent numerator/denominator out of supported range");
    return {x.num().convert_to<long long>(), x.den().convert_to<long long>()};
}

// d <= 1/(c * base^expo), decided exactly: (d_num * c)^r * base^p <= d_den^r.
bool error_within(const Rational& d, const BigInt& c, const BigInt& base, const Rational& expo) {
    if (d.is_zero()) return true;
    if (d.is_negative()) throw std::invalid_argument("error_within: negative error");
    const Exp e = exp_of(expo);
    BigInt lhs = big_pow(d.num() * c, static_cast<unsigned>(e.r));
    BigInt rhs = big_pow(d.den(), static_cast<unsigned>(e.r));
    if (e.p >= 0)
        lhs *= big_pow(base, static_cast<unsigned>(e.p));
    else
        rhs *= big_pow(base, static_cast<unsigned>(-e.p));
    return lhs <= rhs;
}

// 1/ceil(q * N^expo): equals 1/(q N^expo) exactly whenever that value is
// rational, and the tightest 1/integer below it otherwise, so met_target is
// never optimistic.
Rational reciprocal_pow_bound(const BigInt& q, std::int64_t N, const Rational& expo) {
    const Exp e = exp_of(expo);
    BigInt c = ceil_mul_pow(q, BigInt(N), e.p, e.r);
    if (c < 1) c = 1;
    return Rational(1, c);
}

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t q) {
    return static_cast<std::int64_t>(static_cast<unsigned __int128>(x) *
                                     static_cast<unsigned __int128>(y) % static_cast<unsigned __int128>(q));
}

BigInt binomial(std::uint64_t s, int n) {
    BigInt b = 1;
    for (int i = 0; i < n; ++i) b = b * BigInt(s - static_cast<std::uint64_t>(i)) / BigInt(i + 1);
    return b;
}

struct Candidate {
    bool present = false;
    std::int64_t v = 0;
    BigInt M;
    std::vector<std::int64_t> denoms;
};

// candidate (v, M) strictly better than best: smaller v/M, ties to smaller M.
// The lex tie falls out of enumeration order (first achiever is kept).
bool improves(std::int64_t v, const BigInt& M, const Candidate& best) {
    if (!best.present) return true;
    const BigInt lhs = BigInt(v) * best.M;
    const BigInt rhs = BigInt(best.v) * M;
    if (lhs != rhs) return lhs < rhs;
    return M < best.M;
}

// Certificate body shared by every branch: split b/M into partial fractions,
// fold the integer part into the first numerator, recompute the exact error
// against alpha.
ApproxResult from_rounding(const Rational& alpha, std::vector<BigInt> dens, const BigInt& b) {
    BigInt M = 1;
    for (const BigInt& d : dens) M *= d;
    PartialFractionDecomposition pf = crt_partial_fractions(b, dens);
    ApproxResult r;
    r.denominators = std::move(dens);
    r.numerators.reserve(pf.terms.size());
    for (auto& [ai, qi] : pf.terms) r.numerators.push_back(std::move(ai));
    r.numerators[0] += pf.integer_part * r.denominators[0];
    r.error = abs(alpha - Rational(b, M));
    return r;
}

ApproxResult assemble(const Rational& alpha, const BigInt& a, const BigInt& q,
                      const std::vector<std::int64_t>& denoms) {
    std::vector<BigInt> dens(denoms.begin(), denoms.end());
    BigInt M = 1;
    for (const BigInt& d : dens) M *= d;
    return from_rounding(alpha, std::move(dens), nearest_int(Rational(M * a, q)));
}

void apply_target(ApproxResult& r, const BigInt& q, std::int64_t N, const Rational& phi,
                  const Rational& epsilon) {
    r.target_bound = reciprocal_pow_bound(q, N, phi - epsilon);
    r.met_target = r.error <= r.target_bound;
}

std::int64_t scan_modulus(const BigInt& q) {
    if (q > BigInt(std::int64_t(1) << 62))
        throw budget_exceeded("search: hypothesis denominator beyond scan kernel range");
    return q.convert_to<std::int64_t>();
}

// Shared machinery of the two searches. Leading denominators are handed to
// threads; each leading index is scanned serially in lexicographic order, so
// "first qualifying tuple" and the running minimum are both deterministic
// regardless of thread count. A chunk is abandoned only when some smaller
// leading index already holds a qualifier.
template <typename ScanLead>
ApproxResult run_scan(const SearchParams& p, std::int64_t lead_count, const BigInt& L,
                      ScanLead&& scan_lead, bool parallel) {
    struct LeadOutcome {
        Candidate qualifier;
        Candidate best;
        std::uint64_t scanned = 0;
        std::uint64_t skipped = 0;
    };
    std::vector<LeadOutcome> outcomes(static_cast<std::size_t>(lead_count));
    std::atomic<std::int64_t> stop_leading{lead_count};

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < lead_count; ++i) {
        if (i > stop_leading.load(std::memory_order_relaxed)) continue;
        LeadOutcome& out = outcomes[static_cast<std::size_t>(i)];
        scan_lead(i, out.qualifier, out.best, out.scanned, out.skipped, stop_leading);
        if (out.qualifier.present) {
            std::int64_t cur = stop_leading.load(std::memory_order_relaxed);
            while (i < cur && !stop_leading.compare_exchange_weak(cur, i)) {
            }
        }
    }

    std::uint64_t scanned = 0, skipped = 0;
    for (const LeadOutcome& o : outcomes) {
        scanned += o.scanned;
        skipped += o.skipped;
    }

    ApproxResult result;
    const Candidate* winner = nullptr;
    for (const LeadOutcome& o : outcomes)
        if (o.qualifier.present) {
            winner = &o.qualifier;
            break;
        }
    if (winner) {
        result = assemble(p.alpha, p.a, p.q, winner->denoms);
        result.branch = Branch::et_search;
    } else {
        Candidate best;
        for (const LeadOutcome& o : outcomes)
            if (o.best.present && improves(o.best.v, o.best.M, best)) best = o.best;
        if (!best.present) throw std::logic_error("search: empty scan");
        result = assemble(p.alpha, p.a, p.q, best.denoms);
        result.branch = Branch::exhausted;
    }
    result.L = L;
    result.tuples_scanned = scanned;
    result.tuples_skipped = skipped;
    apply_target(result, p.q, p.N, p.phi, p.epsilon);
    return result;
}

ApproxResult theorem1_scan(const SearchParams& p, const PrimeWindow& P, WorkBudget& budget,
                           bool parallel) {
    const int n = p.n;
    const std::int64_t s = static_cast<std::int64_t>(P.size());
    if (s < n) throw std::invalid_argument("theorem1_search: window too small");
    const std::int64_t q = scan_modulus(p.q);
    const std::int64_t a0 = mod_floor(p.a, p.q).convert_to<std::int64_t>();

    const BigInt L = choose_L(p.q, p.N, p.phi - p.epsilon / Rational(2), n);
    // v/q < 1/L  <=>  v <= (q-1)/L, integer arithmetic throughout.
    const std::int64_t thresh =
        L > BigInt(q - 1) ? 0 : ((BigInt(q - 1)) / L).convert_to<std::int64_t>();

    const BigInt combos = binomial(static_cast<std::uint64_t>(s), n);
    if (combos > BigInt(budget.limit)) throw budget_exceeded("theorem1_search: tuple universe too large");
    budget.charge(combos.convert_to<std::uint64_t>(), "theorem1_search");

    auto scan_lead = [&](std::int64_t i1, Candidate& qualifier, Candidate& best,
                         std::uint64_t& scanned, std::uint64_t& skipped,
                         std::atomic<std::int64_t>& stop_leading) {
        (void)skipped;
        std::vector<std::int64_t> idx(static_cast<std::size_t>(n));
        std::vector<std::int64_t> res(static_cast<std::size_t>(n));
        for (int d = 0; d < n; ++d) idx[static_cast<std::size_t>(d)] = i1 + d;
        auto recompute = [&](int from) {
            for (int d = from; d < n; ++d) {
                const std::int64_t prev = d == 0 ? a0 % q : res[static_cast<std::size_t>(d - 1)];
                res[static_cast<std::size_t>(d)] =
                    mulmod(prev, P.primes[static_cast<std::size_t>(idx[static_cast<std::size_t>(d)])] % q, q);
            }
        };
        recompute(0);
        std::uint64_t since_check = 0;
        for (;;) {
            const std::int64_t t = res[static_cast<std::size_t>(n - 1)];
            const std::int64_t v = std::min(t, q - t);
            ++scanned;
            if (v <= thresh) {
                qualifier.present = true;
                qualifier.v = v;
                qualifier.denoms.resize(static_cast<std::size_t>(n));
                for (int d = 0; d < n; ++d)
                    qualifier.denoms[static_cast<std::size_t>(d)] =
                        P.primes[static_cast<std::size_t>(idx[static_cast<std::size_t>(d)])];
                return;  // first qualifier in lex order within this leading
            }
            // quick filter: M varies by at most 2^n across the window, so a
            // candidate can only improve if v < best.v * 2^n
            bool consider = !best.present;
            if (!consider && static_cast<unsigned __int128>(v) <
                                 (static_cast<unsigned __int128>(best.v) << n))
                consider = true;
            if (consider) {
                BigInt M = 1;
                for (int d = 0; d < n; ++d)
                    M *= BigInt(P.primes[static_cast<std::size_t>(idx[static_cast<std::size_t>(d)])]);
                if (improves(v, M, best)) {
                    best.present = true;
                    best.v = v;
                    best.M = std::move(M);
                    best.denoms.resize(static_cast<std::size_t>(n));
                    for (int d = 0; d < n; ++d)
                        best.denoms[static_cast<std::size_t>(d)] =
                            P.primes[static_cast<std::size_t>(idx[static_cast<std::size_t>(d)])];
                }
            }
            if (++since_check >= 1024) {
                since_check = 0;
                if (i1 > stop_leading.load(std::memory_order_relaxed)) return;
            }
            // next combination with fixed leading index
            int d = n - 1;
            while (d >= 1 && idx[static_cast<std::size_t>(d)] == s - n + d) --d;
            if (d < 1) break;
            ++idx[static_cast<std::size_t>(d)];
            for (int j = d + 1; j < n; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            recompute(d);
        }
    };

    return run_scan(p, s - n + 1, L, scan_lead, parallel);
}

}  // namespace

Rational kappa(int n) {
    if (n < 1) throw std::invalid_argument("kappa: n must be >= 1");
    return Rational(BigInt(3) * n - BigInt(n / 3) - 1, BigInt(4));
}

RegimeCheck n_bound_check(int n, std::int64_t N, const Rational& epsilon) {
    RegimeCheck c;
    if (N < 16) {
        c.small_N = true;
        return c;
    }
    const double lnN = std::log(static_cast<double>(N));
    c.bound = epsilon.to_double() * lnN / (6.0 * std::log(lnN));
    c.holds = static_cast<double>(n) <= c.bound;
    return c;
}

BigInt choose_L(const BigInt& q, std::int64_t N, const Rational& phi, int n) {
    if (q < 1 || N < 1) throw std::invalid_argument("choose_L: inputs must be positive");
    const Exp e = exp_of(phi - Rational(n));
    return floor_mul_pow(q, BigInt(N), e.p, e.r) + 1;
}

SearchParams SearchParams::validated(Rational alpha, BigInt a, BigInt q, std::int64_t N, int n,
                                     Rational epsilon, Rational phi, SearchMode mode) {
    if (q < 1) throw std::invalid_argument("SearchParams: q must be >= 1");
    if (N < 2) throw std::invalid_argument("SearchParams: N must be >= 2");
    if (n < 1) throw std::invalid_argument("SearchParams: n must be >= 1");
    if (big_gcd(big_abs(a), q) != 1) throw std::invalid_argument("SearchParams: need gcd(a, q) = 1");
    if (!(epsilon > Rational(0))) throw std::invalid_argument("SearchParams: epsilon must be > 0");
    if (Rational(2) * phi < Rational(n) || phi > Rational(n))
        throw std::invalid_argument("SearchParams: phi must lie in [n/2, n]");
    if (mode == SearchMode::theorem2) {
        if (n != 3) throw std::invalid_argument("SearchParams: theorem2 requires n = 3");
        if (Rational(2) * phi < Rational(3) || phi > Rational(2))
            throw std::invalid_argument("SearchParams: theorem2 requires phi in [3/2, 2]");
    }
    const Rational d = abs(alpha - Rational(a, q));
    if (!error_within(d, q, BigInt(N), phi))
        throw std::invalid_argument("SearchParams: hypothesis |alpha - a/q| <= 1/(q N^phi) fails");
    SearchParams p;
    p.alpha = std::move(alpha);
    p.a = std::move(a);
    p.q = std::move(q);
    p.N = N;
    p.n = n;
    p.epsilon = std::move(epsilon);
    p.phi = std::move(phi);
    p.mode = mode;
    return p;
}

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::trivial: return "trivial_case";
        case Branch::et_search: return "et_search";
        case Branch::exhausted: return "exhausted";
        case Branch::oracle: return "oracle";
    }
    return "?";
}

ApproxResult trivial_case(const Rational& alpha, std::int64_t N, int n, const PrimeWindow& P) {
    (void)N;  // the window already encodes it
    if (static_cast<int>(P.size()) < n) throw std::invalid_argument("trivial_case: window too small");
    std::vector<BigInt> dens(P.primes.end() - n, P.primes.end());
    BigInt M = 1;
    for (const BigInt& d : dens) M *= d;
    const BigInt b = nearest_int(alpha * Rational(M));
    ApproxResult r = from_rounding(alpha, std::move(dens), b);
    r.target_bound = Rational(1, 2 * M);
    r.met_target = r.error <= r.target_bound;
    r.L = 1;
    r.branch = Branch::trivial;
    return r;
}

ApproxResult theorem1_search(const SearchParams& p, const PrimeWindow& P, WorkBudget& budget) {
    if (p.mode != SearchMode::theorem1) throw std::invalid_argument("theorem1_search: wrong mode");
    // q <= N^{n - phi}: the trivial rounding bound already beats the target.
    const Exp e = exp_of(Rational(p.n) - p.phi);
    if (cmp_pow(p.q, BigInt(p.N), e.p, e.r) <= 0) {
        ApproxResult r = trivial_case(p.alpha, p.N, p.n, P);
        apply_target(r, p.q, p.N, p.phi, p.epsilon);
        return r;
    }
    return theorem1_scan(p, P, budget, true);
}

ApproxResult theorem1_search_serial(const SearchParams& p, const PrimeWindow& P,
                                    WorkBudget& budget) {
    if (p.mode != SearchMode::theorem1) throw std::invalid_argument("theorem1_search: wrong mode");
    const Exp e = exp_of(Rational(p.n) - p.phi);
    if (cmp_pow(p.q, BigInt(p.N), e.p, e.r) <= 0) {
        ApproxResult r = trivial_case(p.alpha, p.N, p.n, P);
        apply_target(r, p.q, p.N, p.phi, p.epsilon);
        return r;
    }
    return theorem1_scan(p, P, budget, false);
}

ApproxResult theorem2_search(const SearchParams& p, const PrimeWindow& P, WorkBudget& budget) {
    if (p.mode != SearchMode::theorem2) throw std::invalid_argument("theorem2_search: wrong mode");
    const std::int64_t s = static_cast<std::int64_t>(P.size());
    if (s < 2) throw std::invalid_argument("theorem2_search: window too small");

    const Exp e = exp_of(Rational(p.n) - p.phi);
    if (cmp_pow(p.q, BigInt(p.N), e.p, e.r) <= 0) {
        ApproxResult r = trivial_case(p.alpha, p.N, 3, P);
        apply_target(r, p.q, p.N, p.phi, p.epsilon);
        return r;
    }

    const std::int64_t q = scan_modulus(p.q);
    const std::int64_t a0 = mod_floor(p.a, p.q).convert_to<std::int64_t>();
    const BigInt L = choose_L(p.q, p.N, p.phi - p.epsilon / Rational(2), 3);
    const std::int64_t thresh =
        L > BigInt(q - 1) ? 0 : ((BigInt(q - 1)) / L).convert_to<std::int64_t>();

    const std::int64_t lo3 = (p.N + 1) / 2, hi3 = p.N;
    const BigInt combos =
        binomial(static_cast<std::uint64_t>(s), 2) * BigInt(hi3 - lo3 + 1);
    if (combos > BigInt(budget.limit)) throw budget_exceeded("theorem2_search: tuple universe too large");
    budget.charge(combos.convert_to<std::uint64_t>(), "theorem2_search");

    auto scan_lead = [&](std::int64_t i1, Candidate& qualifier, Candidate& best,
                         std::uint64_t& scanned, std::uint64_t& skipped,
                         std::atomic<std::int64_t>& stop_leading) {
        const std::int64_t p1 = P.primes[static_cast<std::size_t>(i1)];
        const std::int64_t r1 = mulmod(a0 % q, p1 % q, q);
        std::uint64_t since_check = 0;
        for (std::int64_t i2 = i1 + 1; i2 < s; ++i2) {
            const std::int64_t p2 = P.primes[static_cast<std::size_t>(i2)];
            const std::int64_t r2 = mulmod(r1, p2 % q, q);
            for (std::int64_t q3 = lo3; q3 <= hi3; ++q3) {
                // coprimality keeps the partial-fraction split canonical and
                // subsumes q3 != p1, p2
                if (q3 % p1 == 0 || q3 % p2 == 0) {
                    ++skipped;
                    continue;
                }
                ++scanned;
                const std::int64_t t = mulmod(r2, q3 % q, q);
                const std::int64_t v = std::min(t, q - t);
                if (v <= thresh) {
                    qualifier.present = true;
                    qualifier.v = v;
                    qualifier.denoms = {p1, p2, q3};
                    return;
                }
                bool consider = !best.present;
                if (!consider && static_cast<unsigned __int128>(v) <
                                     (static_cast<unsigned __int128>(best.v) << 3))
                    consider = true;
                if (consider) {
                    BigInt M = BigInt(p1) * p2 * q3;
                    if (improves(v, M, best)) {
                        best.present = true;
                        best.v = v;
                        best.M = std::move(M);
                        best.denoms = {p1, p2, q3};
                    }
                }
                if (++since_check >= 1024) {
                    since_check = 0;
                    if (i1 > stop_leading.load(std::memory_order_relaxed)) return;
                }
            }
        }
    };

    return run_scan(p, s - 1, L, scan_lead, true);
}

std::pair<BigInt, BigInt> combine_fractions(const std::vector<std::pair<BigInt, BigInt>>& parts) {
    Rational sum(0);
    for (const auto& [a, q] : parts) sum += Rational(a, q);
    return {sum.num(), sum.den()};
}

int omega(const BigInt& Q) {
    if (Q < 1) throw std::invalid_argument("omega: Q must be >= 1");
    if (Q > BigInt("1000000000000000000")) throw budget_exceeded("omega: Q beyond trial-division budget 1e18");
    std::uint64_t m = Q.convert_to<std::uint64_t>();
    int count = 0;
    for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
        if (m % d == 0) {
            ++count;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) ++count;
    return count;
}

Corollary2Report corollary2_probe(const Rational& alpha, const BigInt& a, const BigInt& q,
                                  const BigInt& X, int n, const Rational& epsilon,
                                  WorkBudget& budget) {
    if (X < 2) throw std::invalid_argument("corollary2_probe: X must be >= 2");
    if (q < 1 || q > X) throw std::invalid_argument("corollary2_probe: need 1 <= q <= X");
    if (big_gcd(big_abs(a), q) != 1) throw std::invalid_argument("corollary2_probe: need gcd(a, q) = 1");
    const Rational d = abs(alpha - Rational(a, q));
    if (!(d * Rational(q * X) <= Rational(1)))
        throw std::invalid_argument("corollary2_probe: hypothesis |alpha - a/q| <= 1/(qX) fails");

    const Rational kap = kappa(n);
    const BigInt Nbig = ceil_mul_pow(BigInt(1), X, kap.den().convert_to<long long>(),
                                     kap.num().convert_to<long long>());
    if (Nbig > BigInt(100'000'000)) throw budget_exceeded("corollary2_probe: N beyond sieve cap");
    const std::int64_t N = Nbig.convert_to<std::int64_t>();

    // steepest quarter-grid exponent the hypothesis supports; kappa itself
    // works except when ceil(X^{1/kappa}) overshoots.
    std::optional<SearchParams> params;
    Rational phi = kap;
    while (Rational(2) * phi >= Rational(n)) {
        try {
            params = SearchParams::validated(alpha, a, q, N, n, epsilon, phi);
            break;
        } catch (const std::invalid_argument&) {
            phi -= Rational(1, 4);
        }
    }
    if (!params) throw std::invalid_argument("corollary2_probe: no admissible phi on the grid");

    Corollary2Report rep;
    rep.N = N;
    rep.phi_used = phi;
    const PrimeWindow P = sieve_window(N, q);
    rep.search = theorem1_search(*params, P, budget);

    std::vector<std::pair<BigInt, BigInt>> parts;
    for (std::size_t i = 0; i < rep.search.denominators.size(); ++i)
        parts.emplace_back(rep.search.numerators[i], rep.search.denominators[i]);
    std::tie(rep.A, rep.Q) = combine_fractions(parts);
    rep.omega_Q = omega(rep.Q);
    // Q <= X^{n/kappa(n)}  <=>  Q^{kap_num} <= X^{n * kap_den}
    rep.Q_within_bound = cmp_pow(rep.Q, X, n * kap.den().convert_to<long long>(),
                                 kap.num().convert_to<long long>()) <= 0;
    rep.error_within_bound = error_within(rep.search.error, q, X, Rational(1) - epsilon);
    return rep;
}

std::vector<ScanRow> conjecture_scan(const std::vector<Rational>& alphas,
                                     const std::vector<std::int64_t>& Ns, int n,
                                     const Rational& epsilon, WorkBudget& budget, bool timing) {
    std::vector<ScanRow> rows;
    for (const Rational& alpha : alphas) {
        for (std::int64_t N : Ns) {
            for (long long j = 2LL * n; j <= 4LL * n; ++j) {  // phi = n/2 .. n step 1/4
                const Rational phi(j, 4);
                const Exp e = exp_of(phi);
                BigInt height = floor_mul_pow(BigInt(1), BigInt(N), e.p, e.r);
                if (height < 1) height = 1;
                const BestApprox ba = best_single_approx(alpha, height);
                SearchParams params;
                try {
                    params = SearchParams::validated(alpha, ba.a, ba.q, N, n, epsilon, phi);
                } catch (const std::invalid_argument&) {
                    continue;  // hypothesis not manufacturable at this phi
                }
                const PrimeWindow P = sieve_window(N, ba.q);
                ScanRow row;
                row.alpha = alpha;
                row.a = ba.a;
                row.q = ba.q;
                row.N = N;
                row.n = n;
                row.phi = phi;
                row.epsilon = epsilon;
                const auto t0 = std::chrono::steady_clock::now();
                row.result = theorem1_search(params, P, budget);
                if (timing)
                    row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count();
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string verify_certificate(const Rational& alpha, const ApproxResult& r) {
    if (r.denominators.empty() || r.denominators.size() != r.numerators.size())
        return "denominator/numerator shape mismatch";
    BigInt M = 1;
    for (const BigInt& d : r.denominators) {
        if (d < 1) return "denominator < 1";
        M = big_lcm(M, d);
    }
    const Rational approx = r.approximant();
    if (abs(alpha - approx) != r.error) return "stored error does not recompute";
    if (r.met_target != (r.error <= r.target_bound)) return "met_target inconsistent";
    // the partial fractions must recompose to a single lattice point over M
    if (M % approx.den() != 0) return "approximant denominator does not divide lcm";
    return {};
}

}  // namespace nfrac
