#pragma once

#include <vector>

#include "fermatlab/exactcore.hpp"

namespace fermatlab {

enum class TriangleShape { Acute, Right, Obtuse, Degenerate };

const char* shapeName(TriangleShape s);

/// One sample of the surface c(n) = (a^n + b^n)^(1/n). Membership in the
/// space S additionally requires n > 2 and b <= a < c.
struct SPoint {
    double a;
    double b;
    double n;
    double c;
    double thetaDeg;
    TriangleShape shape;
    bool inS;
};

struct LatticeArc {
    Natural count;  // integers c with a < c < a * 2^(1/nMin)
    Natural bound;  // floor(a * (2^(1/3) - 1))
};

/// Closed interval sampled at a fixed step, endpoints included.
struct GridRange {
    double lo;
    double hi;
};

/// (a^n + b^n)^(1/n), evaluated with the larger base factored out so large n
/// cannot overflow: c = hi * (1 + (lo/hi)^n)^(1/n).
double cOfN(double a, double b, double n);

/// a + 1 <= c and c^2 < 2a^2, both exact in integers.
bool cBoundsHold(const Natural& a, const Natural& c);

/// Interior angle opposite side c(n), in degrees, via the law of cosines.
double thetaAngle(double a, double b, double n);

/// Right at n = 2 (within 1e-12), obtuse below, acute above; cross-checked
/// against the sign of a^2 + b^2 - c^2.
TriangleShape classifyTriangle(double a, double b, double n);

/// Number of integers on the open arc (a, a * 2^(1/nMin)), plus the printed
/// cap floor(a * (2^(1/3) - 1)). Integral nMin is counted with exact integer
/// power comparisons; fractional nMin falls back to guarded floating
/// evaluation.
LatticeArc latticeCountOnArc(const Natural& a, double nMin);

/// Integers c with a < c < a * sqrt(2), exact. Companion count to
/// latticeCountOnArc for comparing the two printed constants.
Natural sqrt2CountOnArc(const Natural& a);

/// Deterministic grid sweep over (a, b, n); rows in a-major, then b, then n
/// order. Requires nRange.lo > 1.
std::vector<SPoint> sweepEmit(GridRange aRange, GridRange bRange, GridRange nRange, double step);

}  // namespace fermatlab
