#include "nfrac/partition.hpp"

#include <stdexcept>

namespace nfrac {

long long mobius_weight(const Partition& p) {
    long long mu = 1;
    for (const auto& block : p.blocks) {
        if (block.empty()) throw std::invalid_argument("mobius_weight: empty block");
        long long factor = 1;
        for (std::size_t i = 1; i + 1 <= block.size(); ++i) factor *= static_cast<long long>(i);
        if ((block.size() - 1) % 2 == 1) factor = -factor;
        mu *= factor;
    }
    return mu;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("enumerate_partitions: n out of range [1, 12]");

    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    // Element i+1 goes to block a[i]; blocks come out ordered by smallest
    // element and elements ascend within blocks, which is the canonical form.
    std::vector<Partition> out;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::vector<int> maxima(static_cast<std::size_t>(n), 0);

    auto emit = [&] {
        int m = 0;
        for (int v : a) m = std::max(m, v + 1);
        Partition p;
        p.blocks.assign(static_cast<std::size_t>(m), {});
        for (int i = 0; i < n; ++i) p.blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])].push_back(i + 1);
        p.mu = mobius_weight(p);
        out.push_back(std::move(p));
    };

    // Iterative RGS successor walk.
    for (;;) {
        emit();
        int i = n - 1;
        while (i > 0) {
            const int cap = maxima[static_cast<std::size_t>(i - 1)] + 1;
            if (a[static_cast<std::size_t>(i)] < cap) break;
            --i;
        }
        if (i == 0) break;
        ++a[static_cast<std::size_t>(i)];
        maxima[static_cast<std::size_t>(i)] =
            std::max(maxima[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            a[static_cast<std::size_t>(j)] = 0;
            maxima[static_cast<std::size_t>(j)] = maxima[static_cast<std::size_t>(j - 1)];
        }
    }
    return out;
}

}  // namespace nfrac
