#pragma once

#include <optional>

#include "fermatlab/exactcore.hpp"
#include "fermatlab/triples.hpp"

namespace fermatlab {

enum class ParityProfile { OneEven, AllOdd, TwoEven, AllEven };

/// Nature of the real root (a^n + b^n)^(1/n). A fractional (rational
/// non-integer) variant is intentionally absent: a rational non-integer root
/// of a monic integer polynomial is impossible, so the root is either a
/// positive integer or irrational.
struct RealnessVerdict {
    enum class Kind { IntegerValue, Irrational };

    Kind kind;
    std::optional<Natural> value;  // the root, when kind == IntegerValue

    bool isInteger() const { return kind == Kind::IntegerValue; }

    static RealnessVerdict integer(Natural root) {
        return {Kind::IntegerValue, std::move(root)};
    }
    static RealnessVerdict irrational() { return {Kind::Irrational, std::nullopt}; }
};

/// 2^k * d rendered as a single real power of two, 2^h with h = k + log2(d).
/// The floating h is for reporting only; integrality of h is decided exactly
/// from d = 1.
struct RealPowerForm {
    double value;
    double h;
    std::optional<Ratio> exactSource;  // set when the value is exactly rational
    bool integralExponent;             // d == 1
};

ParityProfile parityProfile(const Natural& a, const Natural& b, const Natural& c);
ParityProfile parityProfile(const FermatTriple& t);

/// a^n + b^n == c^n (mod 2). For a primitive triple this is equivalent to
/// parityProfile == OneEven, for every n >= 1.
bool parityConsistent(const Natural& a, const Natural& b, const Natural& c, const Natural& n);
bool parityConsistent(const FermatTriple& t, const Natural& n);

/// Exact trichotomy for (a^n + b^n)^(1/n): integer when the power sum is a
/// perfect n-th power, irrational otherwise.
RealnessVerdict rootVerdict(const Natural& a, const Natural& b, const Natural& n);

/// The hypotenuse power reconstructed from a power-of-two even leg:
/// 2^(kn-2)/q^2 + q^2, exactly.
Ratio hypFromPowerLeg(const Natural& kTimesN, const Natural& q);

/// 2^(kn-2) > q^2, given that 2pq = 2^(kn/2) holds exactly for pp.
bool pqDominance(const PythParam& pp, const Natural& kTimesN);

/// c^m - a^m > 2 for odd a < c, m >= 2, computed exactly.
bool minGapHolds(const Natural& a, const Natural& c, const Natural& m);

/// Verifies two exact rational identities for odd a, b and odd n >= 3:
///   (a^2n + b^2n) / a^n == a^n + (b^2/a)^n
///   (a^2n + b^2n) / a^n - (b^2/a)^n + b^n == a^n + b^n
/// Both are algebraic identities; false signals an implementation bug.
bool fracReductionCheck(const Natural& a, const Natural& b, const Natural& n);

/// 2^k * d as 2^h with h = k + log2(d); h is an integer iff d = 1.
RealPowerForm twoAdicAsPowerOfTwo(const Natural& k, const Natural& d);

}  // namespace fermatlab
