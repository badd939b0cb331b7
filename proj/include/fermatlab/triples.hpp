#pragma once

#include <tuple>
#include <vector>

#include "fermatlab/exactcore.hpp"

namespace fermatlab {

/// c <= a after addend normalization: the candidate cannot be a triple.
class OrderingError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// gcd(a, b, c) > 1. Distinct from OrderingError so callers may divide the
/// common factor out and retry.
class NonPrimitiveError : public std::domain_error {
public:
    explicit NonPrimitiveError(const Natural& g)
        : std::domain_error("non-primitive triple (gcd " + g.toString() + ")"), gcd(g) {}
    Natural gcd;
};

/// Validated candidate triple with b <= a < c and gcd(a, b, c) = 1.
/// Addend order is normalized at construction; build via makeFermatTriple.
class FermatTriple {
public:
    const Natural& a() const { return a_; }
    const Natural& b() const { return b_; }
    const Natural& c() const { return c_; }

    bool operator==(const FermatTriple&) const = default;

private:
    friend FermatTriple makeFermatTriple(const Natural&, const Natural&, const Natural&);
    FermatTriple(Natural a, Natural b, Natural c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    Natural a_;
    Natural b_;
    Natural c_;
};

/// Which single element of the triple is even.
enum class FormVariant {
    CEven,  // the sum c carries the factor of two
    BEven,  // the smaller addend does
    AEven,  // the larger addend does
};

struct FormTag {
    FormVariant variant;
    TwoAdicForm twoAdic;  // decomposition of the even element
};

/// Generator pair for Pythagorean triples (p^2 - q^2, 2pq, p^2 + q^2).
struct PythParam {
    Natural p;
    Natural q;

    PythParam(Natural pVal, Natural qVal) : p(std::move(pVal)), q(std::move(qVal)) {
        if (q.isZero() || p <= q) throw std::domain_error("PythParam: requires p > q >= 1");
    }

    /// gcd(p, q) = 1 and opposite parity: the pair generates a primitive triple.
    bool isPrimitiveGenerator() const;
};

struct PythTriple {
    Natural leg1;
    Natural leg2;
    Natural hyp;

    bool operator==(const PythTriple&) const = default;
};

/// Validates and normalizes (a, b, c): addends are stored with b <= a.
/// Throws OrderingError when c <= max(a, b), NonPrimitiveError when the gcd
/// exceeds 1, std::domain_error on zero inputs.
FermatTriple makeFermatTriple(const Natural& a, const Natural& b, const Natural& c);

/// Identifies the even element of the triple and its 2-adic decomposition.
/// Exactly one element must be even.
FormTag classifyForm(const FermatTriple& t);

/// (p^2 - q^2, 2pq, p^2 + q^2) for p > q >= 1, in that order.
PythTriple pythFromParam(const PythParam& pp);

/// Every primitive Pythagorean triple with hypotenuse <= hypLimit, legs in
/// ascending order, sequence ascending by hypotenuse then first leg.
std::vector<PythTriple> enumPrimitivePythagorean(const Natural& hypLimit);

bool isPythagorean(const Natural& x, const Natural& y, const Natural& z);

}  // namespace fermatlab
