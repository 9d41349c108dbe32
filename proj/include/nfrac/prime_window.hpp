#pragma once

#include <cstdint>
#include <vector>

#include "nfrac/bigint.hpp"

namespace nfrac {

// The prime set used throughout: primes p with N/2 <= p <= N (closed window,
// so 2p >= N and p <= N) that do not divide the excluded modulus.
struct PrimeWindow {
    std::int64_t N = 0;
    BigInt excluded_modulus = 1;
    std::vector<std::int64_t> primes;  // strictly increasing

    std::size_t size() const { return primes.size(); }
};

// Plain Eratosthenes over [1, N]; N is capped at 10^8 to keep the full-range
// sieve honest about memory.
PrimeWindow sieve_window(std::int64_t N, const BigInt& excluded_modulus);

// True iff |P| >= N / (3 ln N), the density floor the certificate arithmetic
// assumes.
bool window_size_check(const PrimeWindow& window);

}  // namespace nfrac
