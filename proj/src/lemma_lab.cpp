#include "fermatlab/lemma_lab.hpp"

#include <cmath>

namespace fermatlab {

ParityProfile parityProfile(const Natural& a, const Natural& b, const Natural& c) {
    switch (int(a.isEven()) + int(b.isEven()) + int(c.isEven())) {
        case 0: return ParityProfile::AllOdd;
        case 1: return ParityProfile::OneEven;
        case 2: return ParityProfile::TwoEven;
        default: return ParityProfile::AllEven;
    }
}

ParityProfile parityProfile(const FermatTriple& t) {
    return parityProfile(t.a(), t.b(), t.c());
}

bool parityConsistent(const Natural& a, const Natural& b, const Natural& c, const Natural& n) {
    if (n.isZero()) throw std::domain_error("parityConsistent: requires n >= 1");
    // x^n == x (mod 2) for n >= 1, so the congruence reduces to the bases.
    const bool lhsOdd = a.isOdd() != b.isOdd();
    return lhsOdd == c.isOdd();
}

bool parityConsistent(const FermatTriple& t, const Natural& n) {
    return parityConsistent(t.a(), t.b(), t.c(), n);
}

RealnessVerdict rootVerdict(const Natural& a, const Natural& b, const Natural& n) {
    if (a.isZero() || b.isZero()) throw std::domain_error("rootVerdict: requires a, b >= 1");
    if (n < Natural(2)) throw std::domain_error("rootVerdict: requires n >= 2");
    const Natural s = powBig(a, n) + powBig(b, n);
    const RootResult r = intNthRoot(s, n);
    return r.exact ? RealnessVerdict::integer(r.root) : RealnessVerdict::irrational();
}

Ratio hypFromPowerLeg(const Natural& kTimesN, const Natural& q) {
    if (kTimesN < Natural(2)) throw std::domain_error("hypFromPowerLeg: requires kn >= 2");
    if (q.isZero()) throw std::domain_error("hypFromPowerLeg: requires q >= 1");
    const Natural q2 = q * q;
    return Ratio(powBig(Natural(2), kTimesN - Natural(2)), q2) + Ratio(q2);
}

bool pqDominance(const PythParam& pp, const Natural& kTimesN) {
    if (kTimesN.isOdd()) throw std::domain_error("pqDominance: requires kn even");
    const Natural evenLeg = Natural(2) * pp.p * pp.q;
    if (evenLeg != powBig(Natural(2), kTimesN / Natural(2))) {
        throw std::domain_error("pqDominance: 2pq must equal 2^(kn/2) exactly");
    }
    return powBig(Natural(2), kTimesN - Natural(2)) > pp.q * pp.q;
}

bool minGapHolds(const Natural& a, const Natural& c, const Natural& m) {
    if (a.isEven() || c.isEven()) throw std::domain_error("minGapHolds: requires odd a and c");
    if (a >= c) throw std::domain_error("minGapHolds: requires a < c");
    if (m < Natural(2)) throw std::domain_error("minGapHolds: requires m >= 2");
    return powBig(c, m) - powBig(a, m) > Natural(2);
}

bool fracReductionCheck(const Natural& a, const Natural& b, const Natural& n) {
    if (a.isEven() || b.isEven()) throw std::domain_error("fracReductionCheck: requires odd a, b");
    if (n.isEven() || n < Natural(3)) {
        throw std::domain_error("fracReductionCheck: requires odd n >= 3");
    }

    const Natural an = powBig(a, n);
    const Natural bn = powBig(b, n);
    const Natural twoN = Natural(2) * n;
    const Ratio lhs(powBig(a, twoN) + powBig(b, twoN), an);

    const Ratio bSqOverA = Ratio(b * b, a).pow(n);
    const bool identity = lhs == Ratio(an) + bSqOverA;
    const bool rearranged = lhs - bSqOverA + Ratio(bn) == Ratio(an + bn);
    return identity && rearranged;
}

RealPowerForm twoAdicAsPowerOfTwo(const Natural& k, const Natural& d) {
    if (d.isEven()) throw std::domain_error("twoAdicAsPowerOfTwo: requires odd d");
    const Natural exactValue = powBig(Natural(2), k) * d;
    RealPowerForm form;
    form.value = exactValue.toDouble();
    form.h = k.toDouble() + std::log2(d.toDouble());
    form.exactSource = Ratio(exactValue);
    form.integralExponent = d == Natural(1);
    return form;
}

}  // namespace fermatlab
