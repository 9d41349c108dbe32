#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nfrac/partition.hpp"
#include "nfrac/rng.hpp"

using namespace nfrac;

namespace {

// direct distinct-tuple sum, the independent oracle for the inversion
template <typename F>
BigInt direct_distinct_sum(int n, const std::vector<BigInt>& domain, F&& f) {
    BigInt acc = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<BigInt> tuple(static_cast<std::size_t>(n));
    for (;;) {
        bool distinct = true;
        for (int i = 0; i < n && distinct; ++i)
            for (int j = i + 1; j < n; ++j)
                if (idx[static_cast<std::size_t>(i)] == idx[static_cast<std::size_t>(j)]) {
                    distinct = false;
                    break;
                }
        if (distinct) {
            for (int i = 0; i < n; ++i) tuple[static_cast<std::size_t>(i)] = domain[idx[static_cast<std::size_t>(i)]];
            acc += f(tuple);
        }
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == domain.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return acc;
}

}  // namespace

TEST_CASE("partition counts are Bell numbers") {
    CHECK(enumerate_partitions(1).size() == 1);
    CHECK(enumerate_partitions(2).size() == 2);
    CHECK(enumerate_partitions(3).size() == 5);
    CHECK(enumerate_partitions(5).size() == 52);
    CHECK(enumerate_partitions(8).size() == 4140);
    CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_partitions(13), std::invalid_argument);
}

TEST_CASE("partitions are canonical and duplicate-free") {
    for (int n = 1; n <= 7; ++n) {
        const auto parts = enumerate_partitions(n);
        std::set<std::vector<std::vector<int>>> seen;
        for (const Partition& p : parts) {
            CHECK(seen.insert(p.blocks).second);
            // blocks ordered by smallest element, elements ascending, union full
            std::set<int> all;
            int prev_min = 0;
            for (const auto& b : p.blocks) {
                REQUIRE(!b.empty());
                CHECK(b.front() > prev_min);
                prev_min = b.front();
                for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i] > b[i - 1]);
                for (int e : b) CHECK(all.insert(e).second);
            }
            CHECK(all.size() == static_cast<std::size_t>(n));
            CHECK(*all.begin() == 1);
            CHECK(*all.rbegin() == n);
            CHECK(p.mu == mobius_weight(p));
        }
    }
}

TEST_CASE("mobius weights") {
    Partition singletons{{{1}, {2}, {3}}, 0};
    CHECK(mobius_weight(singletons) == 1);
    Partition pair_single{{{1, 2}, {3}}, 0};
    CHECK(mobius_weight(pair_single) == -1);
    Partition whole{{{1, 2, 3}}, 0};
    CHECK(mobius_weight(whole) == 2);
}

TEST_CASE("all-singletons weight is 1 for every n") {
    for (int n = 1; n <= 12; ++n) {
        Partition p;
        for (int i = 1; i <= n; ++i) p.blocks.push_back({i});
        CHECK(mobius_weight(p) == 1);
    }
}

TEST_CASE("|mu| <= n! and sum over partitions hits falling factorials") {
    for (int n = 1; n <= 8; ++n) {
        BigInt fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        const auto parts = enumerate_partitions(n);
        for (const Partition& p : parts) CHECK(big_abs(BigInt(p.mu)) <= fact);
        // f == 1 over a domain of size D: inversion must count injections
        for (std::int64_t D : {1, 2, 3, 5, 8}) {
            BigInt expect = 1;
            for (int i = 0; i < n; ++i) expect *= BigInt(D - i);
            if (expect < 0) expect = 0;
            BigInt viaparts = 0;
            for (const Partition& p : parts) {
                BigInt term = p.mu;
                for (std::size_t b = 0; b < p.blocks.size(); ++b) term *= BigInt(D);
                viaparts += term;
            }
            CHECK(viaparts == expect);
        }
    }
}

TEST_CASE("inversion example: n=2 product") {
    WorkBudget budget;
    const std::vector<BigInt> D{1, 2};
    std::function<BigInt(const std::vector<BigInt>&)> f = [](const std::vector<BigInt>& t) {
        return t[0] * t[1];
    };
    CHECK(distinct_sum_by_inversion<BigInt, BigInt>(2, D, f, budget) == 4);
}

TEST_CASE("inversion example: n=3 weighted product over {2,3,5}") {
    WorkBudget budget;
    const std::vector<BigInt> D{2, 3, 5};
    std::function<BigInt(const std::vector<BigInt>&)> f = [](const std::vector<BigInt>& t) {
        return t[0] * t[1] * t[1] * t[2];  // q1 q2^2 q3
    };
    const BigInt via_inversion = distinct_sum_by_inversion<BigInt, BigInt>(3, D, f, budget);
    CHECK(via_inversion == direct_distinct_sum(3, D, [](const std::vector<BigInt>& t) {
              return t[0] * t[1] * t[1] * t[2];
          }));
}

TEST_CASE("inversion equals direct distinct sum on random f") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.range(1, 5));
        const int Dsize = static_cast<int>(rng.range(1, 6));
        std::vector<BigInt> domain;
        std::set<std::int64_t> used;
        while (static_cast<int>(domain.size()) < Dsize) {
            const std::int64_t v = rng.range(-9, 9);
            if (used.insert(v).second) domain.emplace_back(v);
        }
        const std::uint64_t salt = rng.next();
        // opaque integer-valued f: a hash of the value tuple
        auto raw = [salt](const std::vector<BigInt>& t) {
            std::uint64_t h = salt;
            for (const BigInt& v : t) {
                SplitMix64 mix(h ^ static_cast<std::uint64_t>(v.convert_to<std::int64_t>() + 1000));
                h = mix.next();
            }
            return BigInt(static_cast<std::int64_t>(h % 2001) - 1000);
        };
        WorkBudget budget;
        std::function<BigInt(const std::vector<BigInt>&)> f = raw;
        CHECK(distinct_sum_by_inversion<BigInt, BigInt>(n, domain, f, budget) ==
              direct_distinct_sum(n, domain, raw));
    }
}

TEST_CASE("inversion respects the work budget") {
    WorkBudget tiny{10};
    const std::vector<BigInt> D{1, 2, 3, 4, 5};
    std::function<BigInt(const std::vector<BigInt>&)> f = [](const std::vector<BigInt>&) {
        return BigInt(1);
    };
    CHECK_THROWS_AS((distinct_sum_by_inversion<BigInt, BigInt>(4, D, f, tiny)), budget_exceeded);
}
