#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "nfrac/expsum.hpp"
#include "nfrac/rng.hpp"

using namespace nfrac;

namespace {

PrimeWindow window_of(std::vector<std::int64_t> primes, std::int64_t N) {
    PrimeWindow w;
    w.N = N;
    w.primes = std::move(primes);
    return w;
}

}  // namespace

TEST_CASE("condition validation") {
    ExpSumParams p;
    p.q = 50, p.n = 2, p.k = 1, p.L = 10, p.N = 40;
    CHECK(validate_conditions(p));
    p.k = 0;
    CHECK_FALSE(validate_conditions(p));  // q = 50 > L N^0 = 10
    p = ExpSumParams{};
    p.q = 10, p.n = 3, p.k = 3, p.L = 5, p.N = 100;
    CHECK_FALSE(validate_conditions(p));  // 2^7 = 128 >= 100
}

TEST_CASE("orthogonality sum") {
    CHECK(std::abs(orthogonality_sum(BigInt(2), 5, BigInt(10)) - std::complex<double>{5, 0}) < 1e-12);
    CHECK(std::abs(orthogonality_sum(BigInt(2), 5, BigInt(3))) < 1e-12);
    CHECK(std::abs(orthogonality_sum(BigInt(1), 1, BigInt(0)) - std::complex<double>{1, 0}) < 1e-12);
    CHECK(std::abs(orthogonality_sum(BigInt(3), 7, BigInt(-14)) - std::complex<double>{7, 0}) < 1e-12);
    CHECK_THROWS_AS(orthogonality_sum(BigInt(2), 4, BigInt(1)), std::invalid_argument);
}

TEST_CASE("product residue histogram") {
    SUBCASE("single factor") {
        const auto h = product_residue_histogram(window_of({5, 7}, 10), {1}, BigInt(1), 3);
        CHECK(h.counts == std::vector<std::int64_t>{0, 1, 1});  // 7 -> 1, 5 -> 2
    }
    SUBCASE("two factors") {
        const auto h = product_residue_histogram(window_of({5, 7}, 10), {1, 1}, BigInt(1), 3);
        CHECK(h.counts == std::vector<std::int64_t>{0, 2, 2});  // {25,35,35,49} mod 3
    }
    SUBCASE("trivial modulus") {
        const auto h = product_residue_histogram(window_of({5, 7, 11}, 22), {1, 1, 1}, BigInt(1), 1);
        CHECK(h.counts == std::vector<std::int64_t>{27});
    }
    SUBCASE("a folded in") {
        const auto h = product_residue_histogram(window_of({5, 7}, 10), {2}, BigInt(2), 3);
        // 2*25 = 50 = 2 mod 3, 2*49 = 98 = 2 mod 3
        CHECK(h.counts == std::vector<std::int64_t>{0, 0, 2});
    }
}

TEST_CASE("lemma1 grouped evaluation") {
    WorkBudget budget;
    SUBCASE("worked two-prime case") {
        ExpSumParams p;
        p.a = 1, p.q = 3, p.n = 2, p.k = 0, p.L = 1, p.N = 10;
        const ExpSumReport rep = lemma1_lhs(p, window_of({5, 7}, 10), budget);
        CHECK(rep.lhs == doctest::Approx(2.0).epsilon(1e-12));  // |2e(1/3)+2e(2/3)| = 2
        CHECK(rep.term_count == 4);
    }
    SUBCASE("n=1 unit terms") {
        ExpSumParams p;
        p.a = 2, p.q = 7, p.n = 1, p.k = 0, p.L = 9, p.N = 10;
        const ExpSumReport rep = lemma1_lhs(p, window_of({5}, 10), budget);
        CHECK(rep.lhs == doctest::Approx(9.0).epsilon(1e-12));  // each |e(...)| = 1
    }
    SUBCASE("trivial modulus counts tuples") {
        ExpSumParams p;
        p.a = 0, p.q = 1, p.n = 3, p.k = 0, p.L = 4, p.N = 10;
        const ExpSumReport rep = lemma1_lhs(p, window_of({5, 7}, 10), budget);
        CHECK(rep.lhs == doctest::Approx(4.0 * 8.0).epsilon(1e-12));  // L * |P|^n
    }
    SUBCASE("empty window rejected") {
        ExpSumParams p;
        p.a = 1, p.q = 3, p.n = 2, p.k = 0, p.L = 1, p.N = 10;
        CHECK_THROWS_AS(lemma1_lhs(p, window_of({}, 10), budget), std::invalid_argument);
    }
}

TEST_CASE("lemma2 pattern behavior") {
    WorkBudget budget;
    ExpSumParams p;
    p.a = 3, p.q = 11, p.n = 3, p.k = 1, p.L = 7, p.N = 20;
    const PrimeWindow P2 = window_of({13, 17, 19}, 20);

    SUBCASE("all-ones pattern equals lemma1 bit for bit") {
        ExpSumParams p2 = p;
        p2.pattern = std::vector<int>{1, 1, 1};
        WorkBudget b2;
        const auto h1 = product_residue_histogram(P2, {1, 1, 1}, p.a, p.q);
        const auto rep1 = lemma1_lhs(p, P2, budget);
        const auto rep2 = lemma2_lhs(p2, P2, b2);
        CHECK(rep1.lhs == rep2.lhs);  // exact equality, same code path
        CHECK(h1.total() == 27);
    }
    SUBCASE("powered pattern vs direct") {
        ExpSumParams p2 = p;
        p2.pattern = std::vector<int>{3};
        WorkBudget b2;
        const auto rep = lemma2_lhs(p2, P2, budget);
        const double direct = lemma_lhs_direct(p2, P2, b2);
        CHECK(rep.lhs == doctest::Approx(direct).epsilon(1e-10));
    }
    SUBCASE("bad patterns rejected") {
        ExpSumParams p2 = p;
        p2.pattern = std::vector<int>{2, 2};
        WorkBudget b2;
        CHECK_THROWS_AS(lemma2_lhs(p2, P2, b2), std::invalid_argument);
        p2.pattern = std::vector<int>{0, 3};
        CHECK_THROWS_AS(lemma2_lhs(p2, P2, b2), std::invalid_argument);
        p2.pattern = std::vector<int>{1, 1, 1, 1};
        CHECK_THROWS_AS(lemma2_lhs(p2, P2, b2), std::invalid_argument);
    }
}

TEST_CASE("parallel and serial l-sums agree exactly") {
    SplitMix64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const std::int64_t q = rng.range(2, 400);
        ResidueHistogram h;
        h.modulus = q;
        h.counts.assign(static_cast<std::size_t>(q), 0);
        for (std::int64_t i = 0; i < q; ++i) h.counts[static_cast<std::size_t>(i)] = rng.range(0, 50);
        const std::int64_t L = rng.range(1, 200);
        WorkBudget b1, b2;
        CHECK(abs_l_sum(h, L, b1) == abs_l_sum_serial(h, L, b2));
    }
}

TEST_CASE("distinct sum via inversion") {
    WorkBudget budget;
    SUBCASE("two primes, ordered pairs") {
        const auto res = distinct_sum_S(BigInt(1), 3, 2, 1, window_of({5, 7}, 10), budget);
        CHECK(res.value == doctest::Approx(2.0).epsilon(1e-12));  // |2 e(2/3)|
        CHECK(res.term_count == 2);
        // displayed n^2 threshold and the binomial(n,2) alternate
        CHECK(res.threshold_quadratic == doctest::Approx((4.0 - 4.0 * 2.0) / 6.0));
        CHECK(res.threshold_binomial == doctest::Approx((4.0 - 1.0 * 2.0) / 6.0));
    }
    SUBCASE("n=1 equals lemma1") {
        ExpSumParams p;
        p.a = 2, p.q = 7, p.n = 1, p.k = 0, p.L = 5, p.N = 12;
        const PrimeWindow P = window_of({11, 13}, 12);
        WorkBudget b2;
        const auto rep = lemma1_lhs(p, P, budget);
        const auto res = distinct_sum_S(BigInt(2), 7, 1, 5, P, b2);
        CHECK(rep.lhs == res.value);
    }
    SUBCASE("trivial modulus gives falling factorial") {
        const auto res = distinct_sum_S(BigInt(0), 1, 2, 3, window_of({5, 7, 11}, 22), budget);
        CHECK(res.value == doctest::Approx(3.0 * 6.0).epsilon(1e-12));  // L * |P|(|P|-1)
    }
    SUBCASE("distinct histogram is nonnegative and counts injections") {
        const auto h = distinct_residue_histogram(window_of({5, 7, 11, 13}, 26), 3, BigInt(1), 9, budget);
        std::int64_t total = 0;
        for (std::int64_t c : h.counts) {
            CHECK(c >= 0);
            total += c;
        }
        CHECK(total == 4 * 3 * 2);
    }
    SUBCASE("matches direct enumeration") {
        SplitMix64 rng(77);
        for (int t = 0; t < 10; ++t) {
            const std::int64_t q = rng.range(2, 60);
            std::int64_t a = rng.range(1, q);
            while (std::gcd(a, q) != 1) a = a % q + 1;
            const int n = static_cast<int>(rng.range(1, 3));
            const std::int64_t L = rng.range(1, 12);
            WorkBudget bg, bd;
            const PrimeWindow P = window_of({17, 19, 23, 29, 31}, 34);
            const auto grouped = distinct_sum_S(BigInt(a), q, n, L, P, bg);
            const double direct = distinct_sum_S_direct(BigInt(a), q, n, L, P, bd);
            CHECK(grouped.value == doctest::Approx(direct).epsilon(1e-9));
        }
    }
}

TEST_CASE("d_r coefficient audit") {
    WorkBudget budget;
    SUBCASE("k = 0 empty product") {
        const auto audit = dr_coefficient_audit(10, window_of({5, 7}, 10), 0, 2, budget);
        CHECK(audit.max_dr == 1);
        CHECK(audit.ok);
    }
    SUBCASE("distinct products stay at 1") {
        const auto audit = dr_coefficient_audit(4, window_of({5, 7}, 10), 1, 2, budget);
        CHECK(audit.max_dr == 1);
        CHECK(audit.ok);
    }
    SUBCASE("collision: l=2 reaches 70 via (5,7) and (7,5)") {
        const auto audit = dr_coefficient_audit(10, window_of({5, 7}, 10), 2, 2, budget);
        CHECK(audit.max_dr >= 2);  // l=2 with (5,7) and (7,5)
        CHECK(audit.bound == 128);  // 2^(2+2+1) * 2^2
        CHECK(audit.ok);
    }
}

TEST_CASE("vinogradov min-sum") {
    SUBCASE("worked examples") {
        CHECK(vinogradov_sum(BigInt(1), 3, 2).lhs == Rational(6));
        CHECK(vinogradov_sum(BigInt(1), 1, 5).lhs == Rational(5));
        CHECK(vinogradov_sum(BigInt(3), 4, 100).lhs == Rational(110));
    }
    SUBCASE("value is independent of a (r -> ar is a bijection)") {
        const auto base = vinogradov_sum(BigInt(1), 101, 50).lhs;
        for (long long a : {2, 7, 50, 100}) CHECK(vinogradov_sum(BigInt(a), 101, 50).lhs == base);
    }
    SUBCASE("explicit majorant holds on a small sweep") {
        for (std::int64_t q : {1, 2, 3, 10, 101, 256, 999}) {
            for (std::int64_t N : {1, 17, 400}) {
                const auto rep = vinogradov_sum(BigInt(1), q, N);
                CHECK(rep.lhs.to_double() <= rep.bound);
                CHECK(rep.ratio <= 1.0);
            }
        }
    }
}

TEST_CASE("erdos-turan criterion") {
    SUBCASE("single half point") {
        const auto chk = erdos_turan_check({Rational(1, 2)}, 2);
        CHECK(chk.S == doctest::Approx(2.0).epsilon(1e-12));
        CHECK_FALSE(chk.conclusion);  // 2 > 1/6
    }
    SUBCASE("quarter pair") {
        const auto chk = erdos_turan_check({Rational(1, 4), Rational(3, 4)}, 4);
        CHECK(chk.S == doctest::Approx(4.0).epsilon(1e-12));
        CHECK_FALSE(chk.conclusion);
    }
    SUBCASE("degenerate zero point") {
        const auto chk = erdos_turan_check({Rational(0)}, 5);
        CHECK(chk.S == doctest::Approx(5.0).epsilon(1e-12));
        CHECK_FALSE(chk.conclusion);
    }
}

TEST_CASE("budgets refuse oversized jobs") {
    WorkBudget tiny{100};
    ExpSumParams p;
    p.a = 1, p.q = 97, p.n = 2, p.k = 0, p.L = 50, p.N = 10;
    CHECK_THROWS_AS(lemma1_lhs(p, window_of({5, 7}, 10), tiny), budget_exceeded);
    WorkBudget tiny2{100};
    CHECK_THROWS_AS(distinct_sum_S_direct(BigInt(1), 97, 2, 50, window_of({5, 7}, 10), tiny2),
                    budget_exceeded);
}
