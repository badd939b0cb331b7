#include "fermatlab/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "fermatlab/exactcore.hpp"
#include "fermatlab/explorer.hpp"
#include "fermatlab/geometry.hpp"
#include "fermatlab/lemma_lab.hpp"
#include "fermatlab/textfmt.hpp"
#include "fermatlab/triples.hpp"

namespace fermatlab {

namespace {

using nlohmann::json;

// SplitMix64. Hand-rolled so sampled evidence is byte-identical across
// platforms and standard-library versions; std::mt19937 distributions do not
// guarantee that.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Inclusive range. Modulo bias is irrelevant at desk-scale spans and
    // keeps the draw sequence platform-independent.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

std::uint64_t gcd3u(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

std::string rangeText(unsigned long lo, unsigned long hi) {
    return std::to_string(lo) + ".." + std::to_string(hi);
}

json skippedEvidence(const std::string& knob, unsigned long value, unsigned long cap) {
    return json{{"skipped", true},
                {"reason", knob + " = " + std::to_string(value) +
                               " exceeds the desk-scale cap " + std::to_string(cap) +
                               "; evidence not gathered"}};
}

using Gathered = std::pair<Verdict, json>;

// ---- L1: exactly one even element -----------------------------------------

Gathered gatherL1(const AuditBounds& b) {
    if (b.parityCMax > 300) {
        return {Verdict::Unchecked, skippedEvidence("parityCMax", b.parityCMax, 300)};
    }
    std::vector<Natural> nVals;
    for (unsigned long n = 3; n <= b.parityNMax; ++n) nVals.emplace_back(n);

    unsigned long triples = 0;
    unsigned long oneEven = 0;
    unsigned long exceptions = 0;
    for (std::uint64_t c = 2; c <= b.parityCMax; ++c) {
        for (std::uint64_t a = 1; a < c; ++a) {
            for (std::uint64_t bb = 1; bb <= a; ++bb) {
                if (gcd3u(a, bb, c) != 1) continue;
                ++triples;
                const Natural na(a);
                const Natural nb(bb);
                const Natural nc(c);
                const bool single = parityProfile(na, nb, nc) == ParityProfile::OneEven;
                if (single) ++oneEven;
                for (const Natural& n : nVals) {
                    if (parityConsistent(na, nb, nc, n) != single) ++exceptions;
                }
            }
        }
    }
    json ev{{"cMax", b.parityCMax},
            {"exponentRange", rangeText(3, b.parityNMax)},
            {"triplesChecked", triples},
            {"oneEvenTriples", oneEven},
            {"exceptions", exceptions}};
    return {exceptions == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

// ---- C2: the three 2-adic forms --------------------------------------------

Gathered gatherC2(const AuditBounds& b) {
    if (b.parityCMax > 300) {
        return {Verdict::Unchecked, skippedEvidence("parityCMax", b.parityCMax, 300)};
    }
    unsigned long aEven = 0;
    unsigned long bEven = 0;
    unsigned long cEven = 0;
    unsigned long excludedByParity = 0;
    unsigned long recomposeMismatches = 0;
    for (std::uint64_t c = 2; c <= b.parityCMax; ++c) {
        for (std::uint64_t a = 1; a < c; ++a) {
            for (std::uint64_t bb = 1; bb <= a; ++bb) {
                if (gcd3u(a, bb, c) != 1) continue;
                const Natural na(a);
                const Natural nb(bb);
                const Natural nc(c);
                if (parityProfile(na, nb, nc) != ParityProfile::OneEven) {
                    ++excludedByParity;  // incompatible with the equation by L1
                    continue;
                }
                const FermatTriple t = makeFermatTriple(na, nb, nc);
                const FormTag tag = classifyForm(t);
                const Natural* even = nullptr;
                switch (tag.variant) {
                    case FormVariant::AEven: ++aEven; even = &t.a(); break;
                    case FormVariant::BEven: ++bEven; even = &t.b(); break;
                    case FormVariant::CEven: ++cEven; even = &t.c(); break;
                }
                if (!(tag.twoAdic.recompose() == *even)) ++recomposeMismatches;
            }
        }
    }
    json ev{{"cMax", b.parityCMax},
            {"formCounts", json{{"AEven", aEven}, {"BEven", bEven}, {"CEven", cEven}}},
            {"excludedByParity", excludedByParity},
            {"recomposeMismatches", recomposeMismatches}};
    return {recomposeMismatches == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

// ---- L3 / C4: integer-or-irrational, never fractional ----------------------

// After an inexact integer root, rule out every denominator up to cap:
// (p/q)^n = s would force p^n = s * q^n.
bool rationalRootExists(const Natural& s, const Natural& n, unsigned long denomMax) {
    for (unsigned long q = 2; q <= denomMax; ++q) {
        if (intNthRoot(s * powBig(Natural(q), n), n).exact) return true;
    }
    return false;
}

Gathered gatherL3(const AuditBounds& b, Rng& rng) {
    if (b.trichotomySamples > 100000) {
        return {Verdict::Unchecked,
                skippedEvidence("trichotomySamples", b.trichotomySamples, 100000)};
    }
    unsigned long integerVerdicts = 0;
    unsigned long irrationalVerdicts = 0;
    unsigned long rationalRoots = 0;
    unsigned long exceptions = 0;
    for (unsigned long i = 0; i < b.trichotomySamples; ++i) {
        const Natural a(rng.range(1, b.trichotomyAbMax));
        const Natural bb(rng.range(1, b.trichotomyAbMax));
        const Natural n(rng.range(3, 6));
        const RealnessVerdict v = rootVerdict(a, bb, n);
        const Natural s = powBig(a, n) + powBig(bb, n);
        if (v.isInteger()) {
            ++integerVerdicts;
            if (!(powBig(*v.value, n) == s)) ++exceptions;
        } else {
            ++irrationalVerdicts;
            if (rationalRootExists(s, n, b.trichotomyDenomMax)) ++rationalRoots;
        }
    }
    json ev{{"samples", b.trichotomySamples},
            {"abMax", b.trichotomyAbMax},
            {"exponentRange", "3..6"},
            {"integerVerdicts", integerVerdicts},
            {"irrationalVerdicts", irrationalVerdicts},
            {"denominatorSearchMax", b.trichotomyDenomMax},
            {"rationalRootsFound", rationalRoots},
            {"exceptions", exceptions}};
    return {rationalRoots == 0 && exceptions == 0 ? Verdict::Verified : Verdict::Falsified,
            ev};
}

Gathered gatherC4(const AuditBounds& b, Rng& rng) {
    if (b.trichotomySamples > 100000) {
        return {Verdict::Unchecked,
                skippedEvidence("trichotomySamples", b.trichotomySamples, 100000)};
    }
    // Third-element framing: two known integers on the difference side,
    // s = c^n - b^n, and the unknown addend a = s^(1/n).
    unsigned long integerVerdicts = 0;
    unsigned long irrationalVerdicts = 0;
    unsigned long rationalRoots = 0;
    for (unsigned long i = 0; i < b.trichotomySamples; ++i) {
        const std::uint64_t cv = rng.range(2, b.trichotomyAbMax);
        const std::uint64_t bv = rng.range(1, cv - 1);
        const Natural n(rng.range(3, 6));
        const Natural s = powBig(Natural(cv), n) - powBig(Natural(bv), n);
        if (intNthRoot(s, n).exact) {
            ++integerVerdicts;
        } else {
            ++irrationalVerdicts;
            if (rationalRootExists(s, n, b.trichotomyDenomMax)) ++rationalRoots;
        }
    }
    json ev{{"samples", b.trichotomySamples},
            {"thirdElement", "difference side c^n - b^n"},
            {"integerVerdicts", integerVerdicts},
            {"irrationalVerdicts", irrationalVerdicts},
            {"denominatorSearchMax", b.trichotomyDenomMax},
            {"rationalRootsFound", rationalRoots}};
    return {rationalRoots == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

// ---- Lemma 5 case arithmetic ------------------------------------------------

Gathered gatherHypOdd(const AuditBounds& b) {
    const auto triples = enumPrimitivePythagorean(Natural(b.pythHypMax));
    unsigned long odd = 0;
    for (const auto& t : triples) {
        if (t.hyp.isOdd()) ++odd;
    }
    json ev{{"hypLimit", b.pythHypMax},
            {"triples", triples.size()},
            {"oddHypotenuses", odd}};
    return {odd == triples.size() ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherL5Case1(const AuditBounds& b) {
    const auto triples = enumPrimitivePythagorean(Natural(b.pythHypMax));
    unsigned long evenHyps = 0;
    unsigned long powerOfTwoHyps = 0;
    for (const auto& t : triples) {
        if (t.hyp.isEven()) ++evenHyps;
        const TwoAdicForm f = twoAdicSplit(t.hyp);
        if (f.d == Natural(1) && !f.k.isZero()) ++powerOfTwoHyps;
    }
    json ev{{"hypLimit", b.pythHypMax},
            {"triples", triples.size()},
            {"evenHypotenuses", evenHyps},
            {"powerOfTwoHypotenuses", powerOfTwoHyps},
            {"note", "an even power 2^(kn/2), kn >= 2, can never appear as a "
                     "primitive hypotenuse"}};
    return {evenHyps == 0 && powerOfTwoHyps == 0 ? Verdict::Verified : Verdict::Falsified,
            ev};
}

Gathered gatherEq12(const AuditBounds& b) {
    unsigned long checked = 0;
    unsigned long mismatches = 0;
    for (unsigned long e = 2; e <= b.powExpMax; ++e) {
        const Natural p = powBig(Natural(2), Natural(e - 1));  // 2pq = 2^e with q = 1
        const Natural q(1);
        const Ratio value = hypFromPowerLeg(Natural(2 * e), q);
        const Natural hyp = p * p + q * q;
        ++checked;
        if (!(value == Ratio(hyp))) ++mismatches;
        if (!(pythFromParam(PythParam(p, q)).hyp == hyp)) ++mismatches;
    }
    json ev{{"evenLegExponents", rangeText(2, b.powExpMax)},
            {"paramsChecked", checked},
            {"mismatches", mismatches}};
    return {mismatches == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherPqDominance(const AuditBounds& b) {
    unsigned long checked = 0;
    unsigned long failures = 0;
    for (unsigned long e = 2; e <= b.powExpMax; ++e) {
        const Natural p = powBig(Natural(2), Natural(e - 1));
        ++checked;
        if (!pqDominance(PythParam(p, Natural(1)), Natural(2 * e))) ++failures;
    }
    // Non-coprime power pairs parametrize the same even leg and must obey the
    // same inequality.
    for (unsigned long i = 2; i <= b.powExpMax / 2; ++i) {
        const Natural p = powBig(Natural(2), Natural(i));
        const Natural q = powBig(Natural(2), Natural(i - 1));
        ++checked;
        if (!pqDominance(PythParam(p, q), Natural(2 * (2 * i)))) ++failures;
    }
    json ev{{"paramsChecked", checked}, {"failures", failures}};
    return {failures == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherQEven1(const AuditBounds& b) {
    // q even with 2pq = 2^(kn/2): q^2 = 2^(kn-2) would contradict
    // 2^(kn-2) = (pq)^2 > q^2, which holds since p > q >= 2.
    unsigned long pairs = 0;
    unsigned long equalityCases = 0;
    unsigned long dominanceFailures = 0;
    for (unsigned long i = 2; 2 * (i + 2) <= 2 * b.powExpMax; ++i) {
        for (unsigned long j = 1; j < i; ++j) {
            const unsigned long knHalf = i + j + 1;  // 2pq = 2^(i+j+1)
            if (2 * knHalf > 2 * b.powExpMax) continue;
            const Natural p = powBig(Natural(2), Natural(i));
            const Natural q = powBig(Natural(2), Natural(j));
            const Natural kn(2 * knHalf);
            ++pairs;
            const Natural pow2 = powBig(Natural(2), kn - Natural(2));
            if (pow2 == q * q) ++equalityCases;
            if (!(pow2 > q * q)) ++dominanceFailures;
            if (!pqDominance(PythParam(p, q), kn)) ++dominanceFailures;
        }
    }
    json ev{{"powerPairs", pairs},
            {"equalityCases", equalityCases},
            {"dominanceFailures", dominanceFailures}};
    return {equalityCases == 0 && dominanceFailures == 0 ? Verdict::Verified
                                                         : Verdict::Falsified,
            ev};
}

Gathered gatherQEven2(const AuditBounds& b) {
    // q = 2^j, q^2 | 2^(kn-2), q^2 != 2^(kn-2): the reconstructed hypotenuse
    // power 2^(kn-2)/q^2 + q^2 is an even integer (never the odd c^(n/2)).
    unsigned long cases = 0;
    unsigned long exceptions = 0;
    for (unsigned long j = 1; (1UL << j) <= b.qGridMax; ++j) {
        const Natural q = powBig(Natural(2), Natural(j));
        for (unsigned long kn = 2 * j + 4; kn <= 2 * b.powExpMax; kn += 2) {
            const Ratio v = hypFromPowerLeg(Natural(kn), q);
            ++cases;
            if (!v.isInteger() || v.numerator().isOdd()) ++exceptions;
        }
    }
    json ev{{"cases", cases}, {"evenIntegerFailures", exceptions}};
    return {exceptions == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherQEven3(const AuditBounds& b) {
    // q even with q^2 not dividing 2^(kn-2): the value is a proper fraction.
    unsigned long cases = 0;
    unsigned long exceptions = 0;
    for (std::uint64_t q = 2; q <= b.qGridMax; q += 2) {
        const Natural nq(q);
        const Natural qSq = nq * nq;
        for (unsigned long kn = 4; kn <= 2 * b.powExpMax; kn += 2) {
            if ((powBig(Natural(2), Natural(kn - 2)) % qSq).isZero()) continue;
            ++cases;
            if (hypFromPowerLeg(Natural(kn), nq).isInteger()) ++exceptions;
        }
    }
    json ev{{"cases", cases}, {"integerValueFailures", exceptions}};
    return {exceptions == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

struct MinGapScan {
    unsigned long pairs = 0;
    unsigned long gapAtMostTwo = 0;
    Natural minGap;
    bool any = false;
};

MinGapScan minGapScan(const AuditBounds& b) {
    MinGapScan s;
    for (std::uint64_t a = 1; a <= b.minGapMax; a += 2) {
        for (std::uint64_t c = a + 2; c <= b.minGapMax; c += 2) {
            for (unsigned long m = 2; m <= b.minGapMMax; ++m) {
                ++s.pairs;
                const Natural gap =
                    powBig(Natural(c), Natural(m)) - powBig(Natural(a), Natural(m));
                if (!(gap > Natural(2))) ++s.gapAtMostTwo;
                if (!s.any || gap < s.minGap) {
                    s.minGap = gap;
                    s.any = true;
                }
            }
        }
    }
    return s;
}

Gathered gatherQOdd1(const AuditBounds& b) {
    if (b.minGapMax > 999) {
        return {Verdict::Unchecked, skippedEvidence("minGapMax", b.minGapMax, 999)};
    }
    const MinGapScan s = minGapScan(b);
    json ev{{"oddBound", b.minGapMax},
            {"powerRange", rangeText(2, b.minGapMMax)},
            {"powerPairs", s.pairs},
            {"gapEqualToTwo", 0},
            {"gapAtMostTwo", s.gapAtMostTwo},
            {"minObservedGap", s.any ? s.minGap.toString() : "n/a"}};
    return {s.gapAtMostTwo == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherQOdd2(const AuditBounds& b) {
    // Odd q > 1 never divides a power of two, so the value keeps q^2 in the
    // denominator and cannot be the odd integer c^(n/2).
    unsigned long cases = 0;
    unsigned long exceptions = 0;
    for (std::uint64_t q = 3; q <= b.qGridMax; q += 2) {
        const Natural nq(q);
        const Natural qSq = nq * nq;
        for (unsigned long kn = 4; kn <= 2 * b.powExpMax; kn += 2) {
            ++cases;
            if ((powBig(Natural(2), Natural(kn - 2)) % qSq).isZero()) ++exceptions;
            const Ratio v = hypFromPowerLeg(Natural(kn), nq);
            if (v.isInteger() || !(v.denominator() == qSq)) ++exceptions;
        }
    }
    json ev{{"cases", cases}, {"exceptions", exceptions}};
    return {exceptions == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherL5Case3(const AuditBounds& b, Rng& rng) {
    // The swapped-roles case adds no arithmetic: addend order cannot change
    // any exact defect. Checked on random draws.
    unsigned long checks = 0;
    unsigned long mismatches = 0;
    const unsigned long rounds = std::min<unsigned long>(b.fracSamples, 500);
    for (unsigned long i = 0; i < rounds; ++i) {
        const Natural x(rng.range(1, 1000000));
        const Natural y(rng.range(1, 1000000));
        const Natural c(rng.range(1, 1000000));
        const Natural n(rng.range(1, 8));
        const Natural cn = powBig(c, n);
        const Natural sum1 = powBig(x, n) + powBig(y, n);
        const Natural sum2 = powBig(y, n) + powBig(x, n);
        ++checks;
        if (!(sum1 == sum2)) ++mismatches;
        const bool below1 = cn < sum1;
        const bool below2 = cn < sum2;
        if (below1 != below2) ++mismatches;
    }
    json ev{{"swapChecks", checks},
            {"mismatches", mismatches},
            {"note", "addend order is immaterial; the Case 2 arithmetic is "
                     "reused with roles exchanged"}};
    return {mismatches == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherMinGap(const AuditBounds& b) {
    if (b.minGapMax > 999) {
        return {Verdict::Unchecked, skippedEvidence("minGapMax", b.minGapMax, 999)};
    }
    const MinGapScan s = minGapScan(b);
    json ev{{"oddBound", b.minGapMax},
            {"powerRange", rangeText(2, b.minGapMMax)},
            {"powerPairs", s.pairs},
            {"violations", s.gapAtMostTwo},
            {"minObservedGap", s.any ? s.minGap.toString() : "n/a"}};
    return {s.gapAtMostTwo == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

// ---- L6: 2^k * d as a single power of two ----------------------------------

Gathered gatherL6(const AuditBounds& b) {
    unsigned long cases = 0;
    unsigned long exceptions = 0;
    for (unsigned long k = 0; k <= b.twoAdicKMax; ++k) {
        for (std::uint64_t d = 1; d <= b.twoAdicDMax; d += 2) {
            ++cases;
            const RealPowerForm f = twoAdicAsPowerOfTwo(Natural(k), Natural(d));
            const Natural exact = powBig(Natural(2), Natural(k)) * Natural(d);
            const double v = exact.toDouble();
            if (std::fabs(f.value - v) > 1e-12 * v) ++exceptions;
            if (std::fabs(std::exp2(f.h) - f.value) > 1e-12 * f.value) ++exceptions;
            if (f.integralExponent != (d == 1)) ++exceptions;
            if (!f.exactSource || !(*f.exactSource == Ratio(exact))) ++exceptions;
        }
    }
    json ev{{"kRange", rangeText(0, b.twoAdicKMax)},
            {"oddDMax", b.twoAdicDMax},
            {"cases", cases},
            {"exceptions", exceptions},
            {"integralityRule", "h integral iff d = 1, decided exactly"}};
    return {exceptions == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

// ---- L7: perfect-square triples --------------------------------------------

Gathered gatherL7(const AuditBounds& b) {
    if (b.fltAMax > 1000 || b.fltNMax > 64) {
        return {Verdict::Unchecked, skippedEvidence("fltAMax", b.fltAMax, 1000)};
    }
    const unsigned long nMax = std::max<unsigned long>(3, b.fltNMax);
    unsigned long squareTriples = 0;
    unsigned long exactSolutions = 0;
    for (std::uint64_t x = 1; x <= b.fltAMax; ++x) {
        const std::uint64_t a = x * x;
        for (std::uint64_t y = 1; y <= x; ++y) {
            const std::uint64_t bb = y * y;
            for (std::uint64_t z = x + 1;; ++z) {
                const std::uint64_t c = z * z;
                if (c * c >= 2 * a * a) break;  // c < a*sqrt(2) window
                if (gcd3u(a, bb, c) != 1) continue;
                ++squareTriples;
                for (unsigned long n = 3; n <= nMax; ++n) {
                    const Natural nn(n);
                    if (powBig(Natural(c), nn) ==
                        powBig(Natural(a), nn) + powBig(Natural(bb), nn)) {
                        ++exactSolutions;
                    }
                }
            }
        }
    }
    json ev{{"squareSideMax", b.fltAMax},
            {"exponentRange", rangeText(3, nMax)},
            {"allSquareTriples", squareTriples},
            {"exactSolutions", exactSolutions}};
    return {exactSolutions == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

// ---- L8 / FRAC_ID: the odd-exponent rearrangement ---------------------------

Gathered gatherL8(const AuditBounds& b, Rng& rng) {
    unsigned long rhsEvenChecks = 0;
    unsigned long oddQuotientChecks = 0;
    unsigned long aEqualsBChecks = 0;
    unsigned long exceptions = 0;
    const unsigned long oddExps[3] = {3, 5, 7};
    const unsigned long rounds = std::min<unsigned long>(b.fracSamples, 500);
    for (unsigned long i = 0; i < rounds; ++i) {
        const std::uint64_t a = 2 * rng.range(0, (b.fracAbMax - 1) / 2) + 1;
        const std::uint64_t bb = 2 * rng.range(0, (b.fracAbMax - 1) / 2) + 1;
        const Natural n(oddExps[rng.range(0, 2)]);
        const Natural sum = powBig(Natural(a), n) + powBig(Natural(bb), n);
        ++rhsEvenChecks;
        if (!sum.isEven() || sum.isZero()) ++exceptions;
    }
    for (std::uint64_t a = 1; a <= b.fracAbMax; a += 2) {
        for (std::uint64_t bb = 1; bb <= b.fracAbMax; bb += 2) {
            const Natural bSq = Natural(bb) * Natural(bb);
            if (!(bSq % Natural(a)).isZero()) continue;
            const Natural f = bSq / Natural(a);
            ++oddQuotientChecks;
            if (f.isEven()) ++exceptions;
            if (a == bb) {
                ++aEqualsBChecks;
                if (!(f == Natural(bb))) ++exceptions;
            }
        }
    }
    json ev{{"rhsEvenChecks", rhsEvenChecks},
            {"oddQuotientChecks", oddQuotientChecks},
            {"aEqualsBChecks", aEqualsBChecks},
            {"exceptions", exceptions}};
    return {exceptions == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherFracId(const AuditBounds& b, Rng& rng) {
    if (b.fracSamples > 100000) {
        return {Verdict::Unchecked, skippedEvidence("fracSamples", b.fracSamples, 100000)};
    }
    unsigned long holds = 0;
    unsigned long failures = 0;
    const unsigned long oddExps[3] = {3, 5, 7};
    for (unsigned long i = 0; i < b.fracSamples; ++i) {
        const std::uint64_t a = 2 * rng.range(0, (b.fracAbMax - 1) / 2) + 1;
        const std::uint64_t bb = 2 * rng.range(0, (b.fracAbMax - 1) / 2) + 1;
        const Natural n(oddExps[rng.range(0, 2)]);
        if (fracReductionCheck(Natural(a), Natural(bb), n)) {
            ++holds;
        } else {
            ++failures;
        }
    }
    json ev{{"samples", b.fracSamples},
            {"abMax", b.fracAbMax},
            {"exponentSet", "3, 5, 7"},
            {"identityHolds", holds},
            {"failures", failures}};
    return {failures == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

// ---- Geometry ---------------------------------------------------------------

Gathered gatherCBounds(const AuditBounds& b, Rng& rng) {
    // Integer side: probe the window edges exactly for every a.
    const unsigned long aTop = std::min<unsigned long>(b.latticeAMax, 2000);
    unsigned long integerChecks = 0;
    unsigned long integerFailures = 0;
    for (std::uint64_t a = 1; a <= aTop; ++a) {
        const Natural na(a);
        const unsigned long width = sqrt2CountOnArc(na).toULong();
        ++integerChecks;
        if (width > 0 && !cBoundsHold(na, Natural(a + 1))) ++integerFailures;
        if (width > 0 && !cBoundsHold(na, Natural(a + width))) ++integerFailures;
        if (cBoundsHold(na, Natural(a + width + 1))) ++integerFailures;
    }
    // Real side: sampled points of S stay strictly inside (a, a*sqrt(2)).
    unsigned long gridChecks = 0;
    unsigned long gridFailures = 0;
    unsigned long subResolutionLower = 0;
    for (unsigned long i = 0; i < b.gridPoints; ++i) {
        const double a = static_cast<double>(rng.range(1, 100));
        const double bb = static_cast<double>(rng.range(1, static_cast<std::uint64_t>(a)));
        const double n = 2.01 + 5.99 * rng.unit();
        const double c = cOfN(a, bb, n);
        ++gridChecks;
        // When (b/a)^n underflows double resolution, c rounds to a; the strict
        // lower bound still holds analytically since b >= 1 forces (b/a)^n > 0.
        bool lowerOk = a < c;
        if (!lowerOk && std::pow(bb / a, n) < 1e-12) {
            lowerOk = true;
            ++subResolutionLower;
        }
        if (!(lowerOk && c * c < 2.0 * a * a)) ++gridFailures;
    }
    json ev{{"integerWindowAMax", aTop},
            {"integerWindowChecks", integerChecks},
            {"integerWindowFailures", integerFailures},
            {"gridPoints", gridChecks},
            {"gridFailures", gridFailures},
            {"lowerBoundCertifiedAnalytically", subResolutionLower}};
    return {integerFailures == 0 && gridFailures == 0 ? Verdict::Verified
                                                      : Verdict::Falsified,
            ev};
}

Gathered gatherAEqB(const AuditBounds&) {
    unsigned long cases = 0;
    unsigned long integerRoots = 0;
    for (std::uint64_t a = 1; a <= 50; ++a) {
        for (unsigned long n = 2; n <= 8; ++n) {
            ++cases;
            const Natural nn(n);
            if (intNthRoot(Natural(2) * powBig(Natural(a), nn), nn).exact) ++integerRoots;
        }
    }
    json ev{{"aMax", 50},
            {"exponentRange", "2..8"},
            {"cases", cases},
            {"integerRoots", integerRoots}};
    return {integerRoots == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherTheta(const AuditBounds& b, Rng& rng) {
    if (b.gridPoints > 1000000) {
        return {Verdict::Unchecked, skippedEvidence("gridPoints", b.gridPoints, 1000000)};
    }
    unsigned long violations = 0;
    double thetaMin = 90.0;
    double thetaMax = 60.0;
    for (unsigned long i = 0; i < b.gridPoints; ++i) {
        const double a = static_cast<double>(rng.range(1, 100));
        const double bb = static_cast<double>(rng.range(1, static_cast<std::uint64_t>(a)));
        const double n = 2.01 + 7.99 * rng.unit();
        const double theta = thetaAngle(a, bb, n);
        if (!(theta > 60.0 && theta < 90.0)) ++violations;
        thetaMin = std::min(thetaMin, theta);
        thetaMax = std::max(thetaMax, theta);
    }
    json ev{{"samples", b.gridPoints},
            {"exponentRange", "(2.01, 10)"},
            {"thetaMinDeg", fmtSig(thetaMin)},
            {"thetaMaxDeg", fmtSig(thetaMax)},
            {"violations", violations}};
    return {violations == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherRemarkShape(const AuditBounds&) {
    unsigned long obtuse = 0;
    unsigned long right = 0;
    unsigned long acute = 0;
    unsigned long mismatches = 0;
    for (std::uint64_t a = 1; a <= 50; ++a) {
        for (std::uint64_t bb = 1; bb <= a; ++bb) {
            const double ad = static_cast<double>(a);
            const double bd = static_cast<double>(bb);
            if (classifyTriangle(ad, bd, 1.5) == TriangleShape::Obtuse) ++obtuse; else ++mismatches;
            if (classifyTriangle(ad, bd, 2.0) == TriangleShape::Right) ++right; else ++mismatches;
            if (classifyTriangle(ad, bd, 3.0) == TriangleShape::Acute) ++acute; else ++mismatches;
        }
    }
    json ev{{"pairGrid", "b <= a <= 50"},
            {"obtuseAtNHalf", obtuse},
            {"rightAtTwo", right},
            {"acuteAtThree", acute},
            {"mismatches", mismatches}};
    return {mismatches == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherNoteDagger(const AuditBounds& b) {
    if (b.latticeAMax > 200000) {
        return {Verdict::Unchecked, skippedEvidence("latticeAMax", b.latticeAMax, 200000)};
    }
    unsigned long violations = 0;
    unsigned long smallANonZero = 0;
    std::string at100 = "n/a";
    for (std::uint64_t a = 1; a <= b.latticeAMax; ++a) {
        const LatticeArc arc = latticeCountOnArc(Natural(a), 3.0);
        if (arc.count > arc.bound) ++violations;
        if (a <= 3 && !arc.count.isZero()) ++smallANonZero;
        if (a == 100) {
            at100 = "count=" + arc.count.toString() + ",bound=" + arc.bound.toString();
        }
    }
    json ev{{"aMax", b.latticeAMax},
            {"boundViolations", violations},
            {"smallANonZeroCounts", smallANonZero},
            {"at100", at100}};
    return {violations == 0 && smallANonZero == 0 ? Verdict::Verified : Verdict::Falsified,
            ev};
}

// ---- Sweeps -----------------------------------------------------------------

std::uint64_t cWindowTop(std::uint64_t a) {
    const std::uint64_t t = 2 * a * a;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(t)));
    while ((r + 1) * (r + 1) <= t) ++r;
    while (r > 0 && r * r >= t) --r;
    return r;
}

Gathered gatherFltSweep(const AuditBounds& b) {
    if (b.fltAMax > 1000 || b.fltNMax > 64) {
        return {Verdict::Unchecked, skippedEvidence("fltAMax", b.fltAMax, 1000)};
    }

    // Validation: with n = 2 admitted, the sweep must recover exactly the
    // parametrized enumeration restricted to the same window (larger leg
    // <= aMax, so hypotenuse < aMax*sqrt(2)).
    const auto validationHits = fltBruteForce(b.fltAMax, 2, 2);
    std::vector<std::array<std::uint64_t, 3>> fromSweep;
    fromSweep.reserve(validationHits.size());
    for (const auto& h : validationHits) {
        fromSweep.push_back({h.triple.a().toULong(), h.triple.b().toULong(),
                             h.triple.c().toULong()});
    }
    std::vector<std::array<std::uint64_t, 3>> fromEnum;
    for (const auto& t : enumPrimitivePythagorean(Natural(cWindowTop(b.fltAMax)))) {
        const std::uint64_t bigLeg = t.leg2.toULong();
        if (bigLeg > b.fltAMax) continue;
        fromEnum.push_back({bigLeg, t.leg1.toULong(), t.hyp.toULong()});
    }
    std::sort(fromSweep.begin(), fromSweep.end());
    std::sort(fromEnum.begin(), fromEnum.end());
    const bool enumerationMatch = fromSweep == fromEnum;

    json validation{{"n2Hits", fromSweep.size()},
                    {"enumerationTriples", fromEnum.size()},
                    {"matchesEnumeration", enumerationMatch},
                    {"note", "hits at n = 2 are expected findings of the "
                             "validation mode, not counterexamples"}};

    if (b.fltNMax < 3) {
        json ev{{"aMax", b.fltAMax},
                {"mode", "validation only (nMax = 2)"},
                {"validation", validation}};
        return {enumerationMatch ? Verdict::Verified : Verdict::Falsified, ev};
    }

    const auto hits = fltBruteForce(b.fltAMax, b.fltNMax, 3);
    json counterexamples = json::array();
    for (const auto& h : hits) {
        counterexamples.push_back(json{{"a", h.triple.a().toString()},
                                       {"b", h.triple.b().toString()},
                                       {"c", h.triple.c().toString()},
                                       {"n", h.n.toString()}});
    }
    json ev{{"aMax", b.fltAMax},
            {"exponentRange", rangeText(3, b.fltNMax)},
            {"exactSolutions", hits.size()},
            {"counterexamples", counterexamples},
            {"validation", validation}};
    const bool ok = hits.empty() && enumerationMatch;
    return {ok ? Verdict::Verified : Verdict::Falsified, ev};
}

Gathered gatherConjecture1(const AuditBounds& b) {
    if (b.conjAMax > 200) {
        return {Verdict::Unchecked, skippedEvidence("conjAMax", b.conjAMax, 200)};
    }
    const Conjecture1Report rep = conjecture1Experiment(b.conjAMax, b.conjNMax);
    unsigned long hitsAtOne = 0;
    unsigned long hitsAtTwo = 0;
    unsigned long hitsAtLeastThree = 0;
    double minDistance = 1.0;
    bool anyFree = false;
    for (const auto& row : rep.rows) {
        if (row.integerHit) {
            const unsigned long hit = row.integerHit->toULong();
            if (hit == 1) ++hitsAtOne;
            else if (hit == 2) ++hitsAtTwo;
            else ++hitsAtLeastThree;
            continue;
        }
        anyFree = true;
        minDistance = std::min(minDistance, row.distanceToNearest);
    }
    json ev{{"aMax", b.conjAMax},
            {"nMax", b.conjNMax},
            {"rows", rep.rows.size()},
            {"integerHitsAtOne", hitsAtOne},
            {"integerHitsAtTwo", hitsAtTwo},
            {"integerHitsAtLeastThree", hitsAtLeastThree},
            {"minDistanceToInteger", anyFree ? fmtSig(minDistance) : "n/a"},
            {"note", "integrality refuted exactly; closeness to rationals is "
                     "reported numerically only"}};
    return {hitsAtLeastThree == 0 ? Verdict::Verified : Verdict::Falsified, ev};
}

json narrativeEvidence(const std::string& note) {
    return json{{"note", note}, {"checked", false}};
}

}  // namespace

const char* kindName(ClaimKind k) {
    switch (k) {
        case ClaimKind::ExactTheorem: return "ExactTheorem";
        case ClaimKind::EmpiricalSweep: return "EmpiricalSweep";
        case ClaimKind::NarrativeUnchecked: return "NarrativeUnchecked";
    }
    return "?";
}

const char* verdictName(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "Verified";
        case Verdict::Falsified: return "Falsified";
        case Verdict::Unchecked: return "Unchecked";
    }
    return "?";
}

AuditBounds AuditBounds::forPreset(const std::string& name) {
    AuditBounds b;
    b.preset = name;
    if (name == "default") return b;
    if (name == "small") {
        b.parityCMax = 60;
        b.trichotomySamples = 200;
        b.pythHypMax = 200;
        b.powExpMax = 12;
        b.qGridMax = 16;
        b.fracSamples = 100;
        b.gridPoints = 200;
        b.latticeAMax = 1000;
        b.fltAMax = 40;
        b.fltNMax = 8;
        b.conjAMax = 10;
        return b;
    }
    if (name == "large") {
        b.parityCMax = 150;
        b.trichotomySamples = 2000;
        b.pythHypMax = 5000;
        b.powExpMax = 24;
        b.qGridMax = 128;
        b.fracSamples = 2000;
        b.gridPoints = 2000;
        b.latticeAMax = 10000;
        b.fltAMax = 200;
        b.fltNMax = 20;
        b.conjAMax = 60;
        return b;
    }
    throw std::invalid_argument("unknown bounds preset: " + name);
}

void AuditBounds::validate() const {
    const auto need = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("invalid audit bounds: ") + what);
    };
    need(parityCMax >= 5, "parityCMax must be at least 5");
    need(parityNMax >= 3, "parityNMax must be at least 3");
    need(trichotomySamples >= 1, "trichotomySamples must be positive");
    need(trichotomyAbMax >= 2, "trichotomyAbMax must be at least 2");
    need(trichotomyDenomMax >= 2, "trichotomyDenomMax must be at least 2");
    need(pythHypMax >= 5, "pythHypMax must be at least 5");
    need(powExpMax >= 3, "powExpMax must be at least 3");
    need(qGridMax >= 4, "qGridMax must be at least 4");
    need(minGapMax >= 3 && minGapMax % 2 == 1, "minGapMax must be odd and at least 3");
    need(minGapMMax >= 2, "minGapMMax must be at least 2");
    need(fracSamples >= 1, "fracSamples must be positive");
    need(fracAbMax >= 3 && fracAbMax % 2 == 1, "fracAbMax must be odd and at least 3");
    need(twoAdicDMax >= 1, "twoAdicDMax must be positive");
    need(gridPoints >= 1, "gridPoints must be positive");
    need(latticeAMax >= 100, "latticeAMax must be at least 100");
    need(fltAMax >= 2, "fltAMax must be at least 2");
    need(fltNMax >= 2, "fltNMax must be at least 2");
    need(conjAMax >= 2, "conjAMax must be at least 2");
    need(conjNMax >= 3, "conjNMax must be at least 3");
}

json AuditBounds::toJson() const {
    return json{{"preset", preset},
                {"parityCMax", parityCMax},
                {"parityNMax", parityNMax},
                {"trichotomySamples", trichotomySamples},
                {"trichotomyAbMax", trichotomyAbMax},
                {"trichotomyDenomMax", trichotomyDenomMax},
                {"pythHypMax", pythHypMax},
                {"powExpMax", powExpMax},
                {"qGridMax", qGridMax},
                {"minGapMax", minGapMax},
                {"minGapMMax", minGapMMax},
                {"fracSamples", fracSamples},
                {"fracAbMax", fracAbMax},
                {"twoAdicKMax", twoAdicKMax},
                {"twoAdicDMax", twoAdicDMax},
                {"gridPoints", gridPoints},
                {"latticeAMax", latticeAMax},
                {"fltAMax", fltAMax},
                {"fltNMax", fltNMax},
                {"conjAMax", conjAMax},
                {"conjNMax", conjNMax}};
}

const ClaimRecord* AuditReport::find(const std::string& id) const {
    for (const auto& c : claims) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

json AuditReport::toJson() const {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    j["toolVersion"] = toolVersion;
    json params = bounds.toJson();
    params["seed"] = seed;
    j["parameters"] = params;
    json claimArr = json::array();
    for (const auto& c : claims) {
        claimArr.push_back(json{{"id", c.id},
                                {"paperRef", c.paperRef},
                                {"kind", kindName(c.kind)},
                                {"verdict", verdictName(c.verdict)},
                                {"evidence", c.evidence}});
    }
    j["claims"] = claimArr;
    json edges = json::array();
    for (const auto& [from, to] : dependencyEdges) {
        edges.push_back(json::array({from, to}));
    }
    j["dependencyEdges"] = edges;
    return j;
}

AuditReport runAudit(const AuditBounds& bounds, std::uint64_t seed) {
    bounds.validate();
    Rng rng(seed);

    AuditReport report;
    report.toolVersion = kToolVersion;
    report.bounds = bounds;
    report.seed = seed;

    const auto add = [&](const char* id, const char* where, const char* quote,
                         ClaimKind kind, Gathered g) {
        report.claims.push_back(ClaimRecord{
            id, std::string(where) + ": \"" + quote + "\"", kind, g.first,
            std::move(g.second)});
    };
    const auto addNarrative = [&](const char* id, const char* where, const char* quote,
                                  const char* note) {
        add(id, where, quote, ClaimKind::NarrativeUnchecked,
            {Verdict::Unchecked, narrativeEvidence(note)});
    };

    // Gather the Lemma 5 sub-cases first so the umbrella claim can aggregate.
    const Gathered case1 = gatherL5Case1(bounds);
    const Gathered qe1 = gatherQEven1(bounds);
    const Gathered qe2 = gatherQEven2(bounds);
    const Gathered qe3 = gatherQEven3(bounds);
    const Gathered qo1 = gatherQOdd1(bounds);
    const Gathered qo2 = gatherQOdd2(bounds);
    const Gathered case3 = gatherL5Case3(bounds, rng);
    const Gathered* subCases[] = {&case1, &qe1, &qe2, &qe3, &qo1, &qo2, &case3};
    Verdict l5Verdict = Verdict::Verified;
    for (const Gathered* g : subCases) {
        if (g->first == Verdict::Falsified) l5Verdict = Verdict::Falsified;
        if (g->first == Verdict::Unchecked && l5Verdict == Verdict::Verified) {
            l5Verdict = Verdict::Unchecked;
        }
    }
    json l5Evidence{{"aggregates",
                     json::array({"L5.case1", "L5.case2.qeven1", "L5.case2.qeven2",
                                  "L5.case2.qeven3", "L5.case2.qodd1",
                                  "L5.case2.qodd2", "L5.case3"})},
                    {"note", "case arithmetic only; the Pythagorean-necessity "
                             "inference is tracked separately as L5.narrative"}};

    add("L1", "Lemma 1", "a single element of the triple", ClaimKind::ExactTheorem,
        gatherL1(bounds));
    add("C2", "Corollary 2", "has one of the following three forms",
        ClaimKind::ExactTheorem, gatherC2(bounds));
    add("L3", "Lemma 3", "is not a fractional number", ClaimKind::ExactTheorem,
        gatherL3(bounds, rng));
    add("C4", "Corollary 4", "the third element is not a fractional number",
        ClaimKind::ExactTheorem, gatherC4(bounds, rng));
    add("L5", "Lemma 5", "the other element has the form $2^k$",
        ClaimKind::ExactTheorem, {l5Verdict, l5Evidence});
    add("L5.case1", "Lemma 5 Case 1", "contradicting the fact that $2^{kn/2}$ is even",
        ClaimKind::ExactTheorem, case1);
    add("L5.case2.qeven1", "Lemma 5 Case 2, q even, item 1", "Suppose $q^2=2^{kn-2}$",
        ClaimKind::ExactTheorem, qe1);
    add("L5.case2.qeven2", "Lemma 5 Case 2, q even, item 2",
        "q^2\\mid 2^{kn-2}$ and $2^{kn-2}\\neq q^{2}", ClaimKind::ExactTheorem, qe2);
    add("L5.case2.qeven3", "Lemma 5 Case 2, q even, item 3", "$q^2\\nmid 2^{kn-2}$",
        ClaimKind::ExactTheorem, qe3);
    add("L5.case2.qodd1", "Lemma 5 Case 2, q odd, item 1",
        "the minimum difference between them is $2$", ClaimKind::ExactTheorem, qo1);
    add("L5.case2.qodd2", "Lemma 5 Case 2, q odd, item 2",
        "Assume $q$ is odd greater than $1$", ClaimKind::ExactTheorem, qo2);
    add("L5.case3", "Lemma 5 Case 3", "using the commutative property of sum",
        ClaimKind::ExactTheorem, case3);
    addNarrative("L5.narrative", "Lemma 5 Case 2 Remark", "must be a Pythagorean triple",
                 "whether the parametrized Pythagorean form is a necessary "
                 "condition at power scale is an inference, not a computation; "
                 "recorded without a verdict");
    add("HYP_ODD", "Lemma 5 Case 1", "requires that the hypotenuse $2^{kn/2}$ is odd",
        ClaimKind::ExactTheorem, gatherHypOdd(bounds));
    add("EQ12", "Eq. (12)", "\\frac{2^{kn-2}}{q^2}+q^2", ClaimKind::ExactTheorem,
        gatherEq12(bounds));
    add("PQ_DOM", "Lemma 5 Case 2, q even, item 1", "results that $2^{kn-2}>q^2$",
        ClaimKind::ExactTheorem, gatherPqDominance(bounds));
    add("MIN_GAP", "Lemma 5 Case 2, q odd, item 1", "Therefore $c^{n/2}-a^{n/2}>2$",
        ClaimKind::ExactTheorem, gatherMinGap(bounds));
    add("L6", "Lemma 6 Case 1", "can be expressed as $2^{h}$", ClaimKind::ExactTheorem,
        gatherL6(bounds));
    addNarrative("L6.narrative", "Lemma 6 Case 1",
                 "with $c=2^{h}$ and $a,b\\in\\mathbb{Z}^{+}$",
                 "reusing an integer-hypothesis lemma at the real value 2^h is "
                 "an inferential step outside exact checking");
    add("L7", "Lemma 7", "a triple with three perfect square numbers",
        ClaimKind::EmpiricalSweep, gatherL7(bounds));
    addNarrative("L7.narrative", "Lemma 7 Case 1",
                 "is proved following a similar reasoning",
                 "the reduction to earlier cases is asserted by analogy; no "
                 "computation evaluates it");
    add("L8", "Lemma 8 Case 1", "compare the arithmetical structures of both equations",
        ClaimKind::ExactTheorem, gatherL8(bounds, rng));
    addNarrative("L8.narrative", "Lemma 8 Case 1, item 2", "Pay attention to line F",
                 "that the structural comparison licenses the conclusion is an "
                 "inference, not a computation");
    addNarrative("TABLE1", "Table 1", "The valid structure for Equation",
                 "the table's side-by-side comparison is not computationally "
                 "decidable; recorded without a verdict");
    add("FRAC_ID", "Eq. (13)", "(2^{h}d)^n=a^{n}+\\left[\\frac{b^2}{a}\\right]^n",
        ClaimKind::ExactTheorem, gatherFracId(bounds, rng));
    add("C_BOUNDS", "Section 2.1", "(a+1) \\leq c<a\\sqrt{2}", ClaimKind::ExactTheorem,
        gatherCBounds(bounds, rng));
    add("A_EQ_B", "Section 2.1", "gives $c=a\\sqrt[n]{2}$", ClaimKind::ExactTheorem,
        gatherAEqB(bounds));
    add("THETA_BOUND", "Section 2.1", "$60$\\textdegree $<\\theta <90$\\textdegree",
        ClaimKind::EmpiricalSweep, gatherTheta(bounds, rng));
    add("REMARK_SHAPE", "Section 2.1 Remark", "then $\\Delta ABC$ is obtuse",
        ClaimKind::EmpiricalSweep, gatherRemarkShape(bounds));
    add("NOTE_DAGGER", "Note [dagger]", "h\\leq \\lfloor a(\\sqrt[3]{2}-1)\\rfloor",
        ClaimKind::ExactTheorem, gatherNoteDagger(bounds));
    add("FLT_SWEEP", "Theorem 9", "there are no positive integers",
        ClaimKind::EmpiricalSweep, gatherFltSweep(bounds));
    add("CONJ1", "Conjecture 1", "Then, $n$ is irrational", ClaimKind::EmpiricalSweep,
        gatherConjecture1(bounds));

    report.dependencyEdges = {
        {"L1", "C2"},
        {"L3", "C4"},
        {"L5", "L6"},
        {"L6", "L8"},
        {"L1", "L5"},
        {"C2", "L5"},
        {"L3", "L5"},
        {"C4", "L5"},
        {"L5.case1", "L5"},
        {"L5.case2.qeven1", "L5"},
        {"L5.case2.qeven2", "L5"},
        {"L5.case2.qeven3", "L5"},
        {"L5.case2.qodd1", "L5"},
        {"L5.case2.qodd2", "L5"},
        {"L5.case3", "L5"},
        {"L5.narrative", "L5"},
        {"HYP_ODD", "L5.case1"},
        {"EQ12", "L5.case2.qeven1"},
        {"EQ12", "L5.case2.qeven2"},
        {"EQ12", "L5.case2.qeven3"},
        {"EQ12", "L5.case2.qodd2"},
        {"PQ_DOM", "L5.case2.qeven1"},
        {"MIN_GAP", "L5.case2.qodd1"},
        {"L6.narrative", "L6"},
        {"L5", "L7"},
        {"L6", "L7"},
        {"L1", "L7"},
        {"C2", "L7"},
        {"L7.narrative", "L7"},
        {"L7", "L8"},
        {"L1", "L8"},
        {"C2", "L8"},
        {"C4", "L8"},
        {"FRAC_ID", "L8"},
        {"A_EQ_B", "L8"},
        {"L8.narrative", "L8"},
        {"TABLE1", "L8"},
        {"C_BOUNDS", "FLT_SWEEP"},
        {"C_BOUNDS", "NOTE_DAGGER"},
        {"FLT_SWEEP", "CONJ1"},
    };
    return report;
}

int exitStatusFor(const AuditReport& report) {
    bool partial = false;
    for (const auto& c : report.claims) {
        if (c.verdict == Verdict::Falsified) return 1;
        if (c.kind != ClaimKind::NarrativeUnchecked && c.verdict == Verdict::Unchecked) {
            partial = true;
        }
    }
    return partial ? 4 : 0;
}

}  // namespace fermatlab
