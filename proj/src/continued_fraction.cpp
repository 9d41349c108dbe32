#include "nfrac/continued_fraction.hpp"

namespace nfrac {

ContinuedFraction continued_fraction(const Rational& x) {
    ContinuedFraction cf;
    // Euclid with floor division. With a reduced input the final quotient is
    // automatically >= 2 for non-integers (remainders strictly decrease), so
    // the output is already canonical.
    BigInt p = x.num(), q = x.den();
    for (;;) {
        BigInt a = div_floor(p, q);
        cf.partial_quotients.push_back(a);
        BigInt r = p - a * q;
        if (r == 0) break;
        p = std::exchange(q, r);
    }
    // p_k = a_k p_{k-1} + p_{k-2}, q_k likewise, seeded with (1,0) and (0,1).
    BigInt pprev = 1, qprev = 0, pcur = 0, qcur = 1;
    cf.convergents.reserve(cf.partial_quotients.size());
    for (const BigInt& a : cf.partial_quotients) {
        BigInt pn = a * pprev + pcur;
        BigInt qn = a * qprev + qcur;
        pcur = std::exchange(pprev, pn);
        qcur = std::exchange(qprev, qn);
        cf.convergents.emplace_back(pn, qn);
    }
    return cf;
}

BestApprox best_single_approx(const Rational& alpha, const BigInt& X) {
    if (X < 1) throw std::invalid_argument("best_single_approx: X must be >= 1");
    const ContinuedFraction cf = continued_fraction(alpha);
    // q_0 = 1 <= X, so a best convergent always exists; denominators increase
    // strictly from index 1 on.
    BestApprox best{cf.convergents.front().num(), cf.convergents.front().den()};
    for (const Rational& c : cf.convergents) {
        if (c.den() > X) break;
        best = {c.num(), c.den()};
    }
    return best;
}

}  // namespace nfrac
