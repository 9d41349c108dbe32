#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nfrac/continued_fraction.hpp"
#include "nfrac/partial_fraction.hpp"
#include "nfrac/rational.hpp"
#include "nfrac/rng.hpp"

using namespace nfrac;

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, 15) == Rational(2, 5));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and ordering") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a > b);
    CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("rational text round trip") {
    CHECK(Rational::parse("355/113").str() == "355/113");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("42").str() == "42");
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("distance to nearest integer") {
    CHECK(dist_nearest_int(Rational(7, 15)) == Rational(7, 15));
    CHECK(dist_nearest_int(Rational(19, 15)) == Rational(4, 15));
    CHECK(dist_nearest_int(Rational(1, 2)) == Rational(1, 2));
    CHECK(dist_nearest_int(Rational(5)) == Rational(0));
    CHECK(dist_nearest_int(Rational(-7, 15)) == Rational(7, 15));
}

TEST_CASE("||x|| symmetry and periodicity") {
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Rational x(rng.range(-500, 500), rng.range(1, 60));
        const long long k = rng.range(-20, 20);
        CHECK(dist_nearest_int(x) == dist_nearest_int(-x));
        CHECK(dist_nearest_int(x) == dist_nearest_int(x + Rational(k)));
        CHECK(dist_nearest_int(x) <= Rational(1, 2));
        CHECK(Rational(0) <= dist_nearest_int(x));
    }
}

TEST_CASE("nearest integer rounds half to even") {
    CHECK(nearest_int(Rational(7, 2)) == 4);
    CHECK(nearest_int(Rational(5, 2)) == 2);
    CHECK(nearest_int(Rational(-1, 2)) == 0);
    CHECK(nearest_int(Rational(-3, 2)) == -2);
    CHECK(nearest_int(Rational(2, 3)) == 1);
    CHECK(nearest_int(Rational(1, 3)) == 0);
}

TEST_CASE("continued fraction expansions") {
    const ContinuedFraction cf = continued_fraction(Rational(22, 7));
    REQUIRE(cf.partial_quotients.size() == 2);
    CHECK(cf.partial_quotients[0] == 3);
    CHECK(cf.partial_quotients[1] == 7);
    CHECK(cf.convergents[0] == Rational(3));
    CHECK(cf.convergents[1] == Rational(22, 7));

    const ContinuedFraction cf2 = continued_fraction(Rational(355, 113));
    REQUIRE(cf2.partial_quotients.size() == 3);
    CHECK(cf2.partial_quotients[0] == 3);
    CHECK(cf2.partial_quotients[1] == 7);
    CHECK(cf2.partial_quotients[2] == 16);

    const ContinuedFraction cf3 = continued_fraction(Rational(5));
    REQUIRE(cf3.partial_quotients.size() == 1);
    CHECK(cf3.partial_quotients[0] == 5);
}

TEST_CASE("continued fraction invariants on random inputs") {
    SplitMix64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Rational x(rng.range(-100000, 100000), rng.range(1, 9999));
        const ContinuedFraction cf = continued_fraction(x);
        REQUIRE(!cf.convergents.empty());
        CHECK(cf.convergents.back() == x);
        // canonical: last quotient >= 2 for non-integers
        if (cf.partial_quotients.size() > 1) CHECK(cf.partial_quotients.back() >= 2);
        for (std::size_t k = 1; k < cf.partial_quotients.size(); ++k)
            CHECK(cf.partial_quotients[k] >= 1);
        // recurrence p_k = a_k p_{k-1} + p_{k-2} and strictly growing q_k
        for (std::size_t k = 2; k < cf.convergents.size(); ++k) {
            const BigInt& ak = cf.partial_quotients[k];
            CHECK(cf.convergents[k].num() ==
                  ak * cf.convergents[k - 1].num() + cf.convergents[k - 2].num());
            CHECK(cf.convergents[k].den() ==
                  ak * cf.convergents[k - 1].den() + cf.convergents[k - 2].den());
        }
        for (std::size_t k = 2; k < cf.convergents.size(); ++k)
            CHECK(cf.convergents[k].den() > cf.convergents[k - 1].den());
    }
}

TEST_CASE("best single approximation") {
    SUBCASE("pi convergent") {
        const BestApprox b = best_single_approx(Rational(355, 113), BigInt(10));
        CHECK(b.a == 22);
        CHECK(b.q == 7);
    }
    SUBCASE("exact representation") {
        const BestApprox b = best_single_approx(Rational(1, 3), BigInt(100));
        CHECK(b.a == 1);
        CHECK(b.q == 3);
    }
    SUBCASE("7/15 at X = 2") {
        const BestApprox b = best_single_approx(Rational(7, 15), BigInt(2));
        CHECK(b.a == 1);
        CHECK(b.q == 2);
    }
}

TEST_CASE("best single approximation dominates all convergents below X") {
    SplitMix64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const Rational alpha(rng.range(0, 100000), rng.range(1, 9999));
        const BigInt X(rng.range(1, 500));
        const BestApprox b = best_single_approx(alpha, X);
        CHECK(b.q <= X);
        CHECK(big_gcd(big_abs(b.a), b.q) == 1);
        const Rational err = abs(alpha - Rational(b.a, b.q));
        for (const Rational& c : continued_fraction(alpha).convergents)
            if (c.den() <= X) CHECK(err <= abs(alpha - c));
    }
}

TEST_CASE("crt partial fractions") {
    SUBCASE("1/15") {
        const auto pf = crt_partial_fractions(BigInt(1), {BigInt(3), BigInt(5)});
        CHECK(pf.integer_part == -1);
        REQUIRE(pf.terms.size() == 2);
        CHECK(pf.terms[0].first == 2);
        CHECK(pf.terms[1].first == 2);
        CHECK(pf.value() == Rational(1, 15));
    }
    SUBCASE("zero") {
        const auto pf = crt_partial_fractions(BigInt(0), {BigInt(3), BigInt(5)});
        CHECK(pf.integer_part == 0);
        CHECK(pf.terms[0].first == 0);
        CHECK(pf.terms[1].first == 0);
    }
    SUBCASE("7/30") {
        const auto pf = crt_partial_fractions(BigInt(7), {BigInt(2), BigInt(3), BigInt(5)});
        CHECK(pf.terms[0].first == 1);
        CHECK(pf.terms[1].first == 1);
        CHECK(pf.terms[2].first == 2);
        CHECK(pf.integer_part == -1);
        CHECK(pf.value() == Rational(7, 30));
    }
    SUBCASE("rejects non-coprime moduli") {
        CHECK_THROWS_AS(crt_partial_fractions(BigInt(1), {BigInt(4), BigInt(6)}),
                        std::invalid_argument);
    }
}

TEST_CASE("crt round trip on random inputs") {
    SplitMix64 rng(41);
    const std::int64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    for (int i = 0; i < 300; ++i) {
        // random subset of prime powers, pairwise coprime by construction
        std::vector<BigInt> denoms;
        for (std::int64_t p : primes)
            if (rng.range(0, 2) == 0) denoms.push_back(big_pow(BigInt(p), static_cast<unsigned>(rng.range(1, 3))));
        if (denoms.empty()) denoms.push_back(BigInt(rng.range(1, 50)));
        const BigInt b(rng.range(-100000, 100000));
        const auto pf = crt_partial_fractions(b, denoms);
        BigInt M = 1;
        for (const BigInt& d : denoms) M *= d;
        CHECK(pf.value() == Rational(b, M));
        for (const auto& [ai, qi] : pf.terms) {
            CHECK(ai >= 0);
            CHECK(ai < qi);
        }
    }
}

TEST_CASE("bigint helpers") {
    CHECK(iroot_floor(BigInt(0), 3) == 0);
    CHECK(iroot_floor(BigInt(26), 3) == 2);
    CHECK(iroot_floor(BigInt(27), 3) == 3);
    CHECK(iroot_floor(BigInt(28), 3) == 3);
    CHECK(iroot_floor(big_pow(BigInt(10), 40), 4) == big_pow(BigInt(10), 10));
    CHECK(cmp_pow(BigInt(8), BigInt(2), 3, 1) == 0);
    CHECK(cmp_pow(BigInt(3), BigInt(10), 1, 2) < 0);   // 3 < sqrt(10)
    CHECK(cmp_pow(BigInt(4), BigInt(10), 1, 2) > 0);   // 4 > sqrt(10)
    CHECK(floor_mul_pow(BigInt(300), BigInt(100), -1, 2) == 30);  // 300/sqrt(100)
    CHECK(ceil_mul_pow(BigInt(300), BigInt(100), -1, 2) == 30);
    CHECK(ceil_mul_pow(BigInt(1), BigInt(10), 1, 2) == 4);  // ceil(sqrt(10))
    CHECK(mod_floor(BigInt(-7), BigInt(5)) == 3);
    CHECK(div_floor(BigInt(-7), BigInt(5)) == -2);
    const ExtGcd e = extended_gcd(BigInt(240), BigInt(46));
    CHECK(e.g == 2);
    CHECK(BigInt(240) * e.x + BigInt(46) * e.y == e.g);
}
