// Serial vs OpenMP kernel comparison: the histogram l-loop and the
// theorem-1 tuple scan. Outputs one line per case with both timings and the
// agreement check (results must match exactly).

#include <chrono>
#include <cstdio>
#include <cstring>

#include "nfrac/expsum.hpp"
#include "nfrac/search.hpp"

using namespace nfrac;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void bench_l_sum(std::int64_t N, std::int64_t q, int n, std::int64_t L) {
    const PrimeWindow P = sieve_window(N, BigInt(q));
    const ResidueHistogram hist =
        product_residue_histogram(P, std::vector<int>(static_cast<std::size_t>(n), 1), BigInt(1), q);

    WorkBudget b1{1ULL << 62}, b2{1ULL << 62};
    auto t0 = std::chrono::steady_clock::now();
    const double serial = abs_l_sum_serial(hist, L, b1);
    const double t_serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const double parallel = abs_l_sum(hist, L, b2);
    const double t_parallel = ms_since(t0);
    std::printf("l-sum      N=%-6lld q=%-6lld n=%d L=%-7lld serial %8.2f ms  omp %8.2f ms  x%.2f  %s\n",
                static_cast<long long>(N), static_cast<long long>(q), n,
                static_cast<long long>(L), t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0,
                serial == parallel ? "match" : "MISMATCH");
}

void bench_search(std::int64_t N, int n) {
    // exact-representation target alpha = 1/q with q = 2^61 - 1: residues are
    // effectively uniform in [0, q), no tuple reaches the early-stop
    // threshold, and the whole universe is scanned
    const std::int64_t q = (std::int64_t(1) << 61) - 1;
    const Rational alpha(1, q);
    const SearchParams p = SearchParams::validated(alpha, BigInt(1), BigInt(q), N, n,
                                                   Rational(1, 4), Rational(n),
                                                   SearchMode::theorem1);
    const PrimeWindow P = sieve_window(N, BigInt(q));

    WorkBudget b1{1ULL << 62}, b2{1ULL << 62};
    auto t0 = std::chrono::steady_clock::now();
    const ApproxResult serial = theorem1_search_serial(p, P, b1);
    const double t_serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const ApproxResult parallel = theorem1_search(p, P, b2);
    const double t_parallel = ms_since(t0);
    const bool match = serial.denominators == parallel.denominators &&
                       serial.error == parallel.error && serial.branch == parallel.branch;
    std::printf("thm1-scan  N=%-6lld n=%d |P|=%-5zu     serial %8.2f ms  omp %8.2f ms  x%.2f  %s\n",
                static_cast<long long>(N), n, P.size(), t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0, match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    if (quick) {
        bench_l_sum(200, 997, 2, 2000);
        bench_search(100, 2);
        return 0;
    }
    bench_l_sum(2000, 9973, 2, 20000);
    bench_l_sum(5000, 99991, 2, 20000);
    bench_l_sum(2000, 9973, 3, 50000);
    bench_search(2000, 3);
    bench_search(5000, 3);
    bench_search(5000, 2);
    return 0;
}
