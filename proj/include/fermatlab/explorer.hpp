#pragma once

#include <optional>
#include <vector>

#include "fermatlab/exactcore.hpp"
#include "fermatlab/triples.hpp"

namespace fermatlab {

/// Real exponent n solving a^n + b^n = c^n for a validated triple, found by
/// bisection on g(n) = (a/c)^n + (b/c)^n - 1.
struct ExponentSolution {
    double n;
    double residual;  // a^n + b^n - c^n at the reported n
    int iterations;
    double bracketLow;
    double bracketHigh;
};

/// Primitive triple whose defect |c^n - a^n - b^n| is small but nonzero.
/// A zero defect is a counterexample and is never recorded as a near miss.
struct NearMiss {
    FermatTriple triple;
    Natural n;
    Natural defect;
};

/// Exact solution found by a sweep (expected only in validation runs that
/// include n = 2).
struct SearchHit {
    FermatTriple triple;
    Natural n;
};

struct NearMissReport {
    std::vector<NearMiss> misses;           // sorted by defect, then a, b, c, n
    std::vector<SearchHit> counterexamples; // zero-defect finds, if any
};

struct Conjecture1Row {
    FermatTriple triple;
    ExponentSolution solved;
    long nearestInteger;
    double distanceToNearest;
    std::optional<Natural> integerHit;  // integer n <= nMax solving exactly, if any
};

struct Conjecture1Report {
    unsigned long aMax;
    unsigned long nMax;
    std::vector<Conjecture1Row> rows;
};

/// Unique real n > 0 with a^n + b^n = c^n; converges to bracket width 1e-13.
ExponentSolution solveExponent(const FermatTriple& t);

/// The first integer n in [1, nMax] solving a^n + b^n = c^n exactly, if one
/// exists. Stops early once the exact gap c^n - a^n - b^n is positive and
/// verified increasing.
std::optional<Natural> firstIntegerHit(const FermatTriple& t, unsigned long nMax);

/// True iff no integer n in [1, nMax] satisfies the equation exactly.
bool integerExponentExclusion(const FermatTriple& t, unsigned long nMax);

/// Scans all primitive triples with b <= a <= aMax and a < c < a*sqrt(2),
/// exponents nMin..nMax, for exact solutions. Sorted by (a, b, c, n).
/// nMin = 2 is the validation mode that recovers Pythagorean triples.
std::vector<SearchHit> fltBruteForce(unsigned long aMax, unsigned long nMax,
                                     unsigned long nMin = 3);

/// All primitive triples in the sweep window whose exact defect at some
/// n in nSet is within defectCap.
NearMissReport nearMissSearch(unsigned long aMax, const std::vector<unsigned long>& nSet,
                              const Natural& defectCap);

/// Per-triple record of the solved real exponent next to the exact
/// integer-exclusion verdict. Integrality is refuted exactly; closeness to a
/// rational is only reported numerically.
Conjecture1Report conjecture1Experiment(unsigned long aMax, unsigned long nMax);

/// Sweep parallelism cap from FERMATLAB_THREADS (0 or unset = auto).
unsigned sweepThreadBudget();

}  // namespace fermatlab
