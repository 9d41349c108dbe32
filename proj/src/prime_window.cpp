#include "nfrac/prime_window.hpp"

#include <cmath>
#include <stdexcept>

namespace nfrac {

PrimeWindow sieve_window(std::int64_t N, const BigInt& excluded_modulus) {
    if (N < 2) throw std::invalid_argument("sieve_window: empty window, need N >= 2");
    if (N > 100'000'000) throw std::invalid_argument("sieve_window: N beyond sieve cap 1e8");
    if (excluded_modulus < 1)
        throw std::invalid_argument("sieve_window: excluded modulus must be >= 1");

    std::vector<char> composite(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t i = 2; i * i <= N; ++i)
        if (!composite[static_cast<std::size_t>(i)])
            for (std::int64_t j = i * i; j <= N; j += i) composite[static_cast<std::size_t>(j)] = 1;

    PrimeWindow w;
    w.N = N;
    w.excluded_modulus = excluded_modulus;
    for (std::int64_t p = (N + 1) / 2; p <= N; ++p) {  // (N+1)/2 = ceil(N/2), closed window
        if (p < 2 || composite[static_cast<std::size_t>(p)]) continue;
        if (excluded_modulus % p == 0) continue;
        w.primes.push_back(p);
    }
    return w;
}

bool window_size_check(const PrimeWindow& window) {
    const double threshold =
        static_cast<double>(window.N) / (3.0 * std::log(static_cast<double>(window.N)));
    return static_cast<double>(window.primes.size()) >= threshold;
}

}  // namespace nfrac
