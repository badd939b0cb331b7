#include "fermatlab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fermatlab {

namespace {

constexpr double kDegPerRad = 57.29577951308232;

// Grid index count for [lo, hi] at the given step, robust to float drift at
// the inclusive endpoint.
std::size_t gridSteps(GridRange r, double step) {
    if (r.hi < r.lo) throw std::domain_error("sweepEmit: empty range");
    return static_cast<std::size_t>(std::floor((r.hi - r.lo) / step + 1e-9)) + 1;
}

}  // namespace

const char* shapeName(TriangleShape s) {
    switch (s) {
        case TriangleShape::Acute: return "Acute";
        case TriangleShape::Right: return "Right";
        case TriangleShape::Obtuse: return "Obtuse";
        case TriangleShape::Degenerate: return "Degenerate";
    }
    return "?";
}

double cOfN(double a, double b, double n) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("cOfN: requires a, b > 0");
    if (!(n >= 1.0)) throw std::domain_error("cOfN: requires n >= 1");
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi * std::exp(std::log1p(std::pow(lo / hi, n)) / n);
}

bool cBoundsHold(const Natural& a, const Natural& c) {
    if (a.isZero()) throw std::domain_error("cBoundsHold: requires a >= 1");
    if (c < a + Natural(1)) return false;
    return c * c < Natural(2) * a * a;
}

double thetaAngle(double a, double b, double n) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("thetaAngle: requires a, b > 0");
    if (!(n > 1.0)) throw std::domain_error("thetaAngle: requires n > 1");
    const double c = cOfN(a, b, n);
    if (c >= a + b || c <= std::abs(a - b)) {
        throw std::domain_error("thetaAngle: degenerate triangle");
    }
    const double cosTheta = std::clamp((a * a + b * b - c * c) / (2.0 * a * b), -1.0, 1.0);
    return std::acos(cosTheta) * kDegPerRad;
}

TriangleShape classifyTriangle(double a, double b, double n) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("classifyTriangle: requires a, b > 0");
    if (!(n > 1.0)) throw std::domain_error("classifyTriangle: requires n > 1");

    const double c = cOfN(a, b, n);
    if (a + b - c <= 1e-12 * (a + b)) return TriangleShape::Degenerate;

    TriangleShape shape;
    if (std::abs(n - 2.0) <= 1e-12) {
        shape = TriangleShape::Right;
    } else {
        shape = n < 2.0 ? TriangleShape::Obtuse : TriangleShape::Acute;
    }

    // The discriminant sign must agree with the exponent classification.
    const double disc = a * a + b * b - c * c;
    const double slack = 1e-9 * (a * a + b * b + c * c);
    const bool consistent = (shape == TriangleShape::Right && std::abs(disc) <= slack) ||
                            (shape == TriangleShape::Acute && disc > -slack) ||
                            (shape == TriangleShape::Obtuse && disc < slack);
    if (!consistent) throw std::logic_error("classifyTriangle: angle cross-check failed");
    return shape;
}

LatticeArc latticeCountOnArc(const Natural& a, double nMin) {
    if (a.isZero()) throw std::domain_error("latticeCountOnArc: requires a >= 1");
    if (!(nMin > 2.0)) throw std::domain_error("latticeCountOnArc: requires nMin > 2");

    // floor(a * 2^(1/3)) == the largest c with c^3 <= 2a^3; the equality case
    // cannot occur, so the cap floor(a * (2^(1/3) - 1)) is exact.
    const Natural cube = powBig(a, Natural(3));
    const Natural bound = intNthRoot(Natural(2) * cube, Natural(3)).root - a;

    Natural count(0);
    const double rounded = std::round(nMin);
    if (std::abs(nMin - rounded) <= 1e-9) {
        const Natural m(static_cast<unsigned long>(rounded));
        count = intNthRoot(Natural(2) * powBig(a, m), m).root - a;
    } else {
        // Guarded floating count: c is inside the arc iff nMin*log(c/a) < log 2.
        const double aDbl = a.toDouble();
        const double cMax = aDbl * std::exp2(1.0 / nMin);
        unsigned long c = a.toULong() + 1;
        for (; static_cast<double>(c) < cMax + 1.0; ++c) {
            if (nMin * std::log(static_cast<double>(c) / aDbl) >= std::log(2.0)) break;
            count += Natural(1);
        }
    }
    return {count, bound};
}

Natural sqrt2CountOnArc(const Natural& a) {
    if (a.isZero()) throw std::domain_error("sqrt2CountOnArc: requires a >= 1");
    return intNthRoot(Natural(2) * a * a, Natural(2)).root - a;
}

std::vector<SPoint> sweepEmit(GridRange aRange, GridRange bRange, GridRange nRange, double step) {
    if (!(step > 0.0)) throw std::domain_error("sweepEmit: requires step > 0");
    if (!(nRange.lo > 1.0)) throw std::domain_error("sweepEmit: requires n > 1");
    if (!(aRange.lo > 0.0) || !(bRange.lo > 0.0)) {
        throw std::domain_error("sweepEmit: requires positive a and b");
    }

    const std::size_t na = gridSteps(aRange, step);
    const std::size_t nb = gridSteps(bRange, step);
    const std::size_t nn = gridSteps(nRange, step);

    std::vector<SPoint> points;
    points.reserve(na * nb * nn);
    for (std::size_t i = 0; i < na; ++i) {
        const double a = aRange.lo + static_cast<double>(i) * step;
        for (std::size_t j = 0; j < nb; ++j) {
            const double b = bRange.lo + static_cast<double>(j) * step;
            for (std::size_t k = 0; k < nn; ++k) {
                const double n = nRange.lo + static_cast<double>(k) * step;
                SPoint pt;
                pt.a = a;
                pt.b = b;
                pt.n = n;
                pt.c = cOfN(a, b, n);
                pt.thetaDeg = thetaAngle(a, b, n);
                pt.shape = classifyTriangle(a, b, n);
                pt.inS = n > 2.0 && b <= a && a < pt.c;
                points.push_back(pt);
            }
        }
    }
    return points;
}

}  // namespace fermatlab
