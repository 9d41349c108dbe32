#include "nfrac/partial_fraction.hpp"

namespace nfrac {

PartialFractionDecomposition crt_partial_fractions(const BigInt& b,
                                                   const std::vector<BigInt>& denoms) {
    for (const BigInt& q : denoms)
        if (q < 1) throw std::invalid_argument("crt_partial_fractions: denominators must be >= 1");
    for (size_t i = 0; i < denoms.size(); ++i)
        for (size_t j = i + 1; j < denoms.size(); ++j)
            if (big_gcd(denoms[i], denoms[j]) != 1)
                throw std::invalid_argument("crt_partial_fractions: denominators not pairwise coprime");

    BigInt M = 1;
    for (const BigInt& q : denoms) M *= q;

    PartialFractionDecomposition out;
    out.terms.reserve(denoms.size());
    Rational sum(0);
    for (const BigInt& q : denoms) {
        BigInt a = 0;
        if (q > 1) {
            const BigInt cof = M / q;
            a = mod_floor(b * mod_inverse(cof, q), q);
        }
        sum += Rational(a, q);
        out.terms.emplace_back(std::move(a), q);
    }
    // sum - b/M is an integer by construction of the residues.
    const Rational diff = Rational(b, M) - sum;
    if (!diff.is_integer())
        throw std::logic_error("crt_partial_fractions: residue solve failed");
    out.integer_part = diff.num();
    return out;
}

}  // namespace nfrac
