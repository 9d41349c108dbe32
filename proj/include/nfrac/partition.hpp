#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nfrac/bigint.hpp"
#include "nfrac/budget.hpp"

namespace nfrac {

// A set partition of {1..n} in canonical order: blocks sorted by smallest
// element, elements sorted inside each block. mu is the partition-lattice
// Mobius weight  prod_j (-1)^(|P_j|-1) (|P_j|-1)!  that turns sums over
// merged index patterns into the sum over distinct tuples.
struct Partition {
    std::vector<std::vector<int>> blocks;  // 1-based elements
    long long mu = 1;
};

// prod_j (-1)^(|P_j|-1) (|P_j|-1)! recomputed from the blocks.
long long mobius_weight(const Partition& p);

// All Bell(n) partitions of {1..n}, enumerated through restricted-growth
// strings so the order is canonical and duplicate-free. Guarded to n <= 12.
std::vector<Partition> enumerate_partitions(int n);

// Sum of f over all n-tuples with pairwise *distinct* entries from domain,
// computed by the partition inversion
//   sum_{distinct} f = sum_S mu(S) * sum_{merged by S} f.
// f is an opaque callback returning an exact value type (any commutative ring
// with +, * by long long). Every merged sum enumerates |domain|^{#blocks}
// tuples; the whole job is charged to the budget before any evaluation.
template <typename Value, typename Elem>
Value distinct_sum_by_inversion(int n, const std::vector<Elem>& domain,
                                const std::function<Value(const std::vector<Elem>&)>& f,
                                WorkBudget& budget) {
    const std::vector<Partition> partitions = enumerate_partitions(n);
    std::uint64_t total_ops = 0;
    for (const Partition& part : partitions) {
        std::uint64_t ops = 1;
        for (std::size_t b = 0; b < part.blocks.size(); ++b) {
            ops *= domain.size();
            if (ops > (1ULL << 62)) throw budget_exceeded("distinct_sum_by_inversion: overflow");
        }
        total_ops += ops;
    }
    budget.charge(total_ops, "distinct_sum_by_inversion");

    Value acc{};
    std::vector<Elem> tuple(static_cast<std::size_t>(n));
    for (const Partition& part : partitions) {
        const std::size_t m = part.blocks.size();
        std::vector<std::size_t> choice(m, 0);
        Value restricted{};
        for (;;) {
            for (std::size_t b = 0; b < m; ++b)
                for (int elem : part.blocks[b]) tuple[static_cast<std::size_t>(elem - 1)] = domain[choice[b]];
            restricted += f(tuple);
            // odometer over domain^m
            std::size_t pos = 0;
            while (pos < m && ++choice[pos] == domain.size()) choice[pos++] = 0;
            if (pos == m) break;
        }
        restricted *= part.mu;
        acc += restricted;
    }
    return acc;
}

}  // namespace nfrac
