#pragma once

#include <vector>

#include "nfrac/rational.hpp"

namespace nfrac {

// Exact split of b / (q_1 ... q_n), the q_i pairwise coprime, into
//   integer_part + sum a_i/q_i   with 0 <= a_i < q_i.
// The residues a_i are canonical, so decompositions are unique and the
// integer part absorbs the excess.
struct PartialFractionDecomposition {
    BigInt integer_part;
    std::vector<std::pair<BigInt, BigInt>> terms;  // (a_i, q_i)

    Rational value() const {
        Rational v(integer_part);
        for (const auto& [a, q] : terms) v += Rational(a, q);
        return v;
    }
};

// a_i = b * (M/q_i)^{-1} mod q_i via extended gcd per modulus.
// Throws std::invalid_argument if the denominators are not pairwise coprime
// or any is < 1.
PartialFractionDecomposition crt_partial_fractions(const BigInt& b,
                                                   const std::vector<BigInt>& denoms);

}  // namespace nfrac
