#include "fermatlab/triples.hpp"

#include <algorithm>
#include <numeric>

namespace fermatlab {

bool PythParam::isPrimitiveGenerator() const {
    if (gcd(p, q) != Natural(1)) return false;
    return p.isOdd() != q.isOdd();
}

FermatTriple makeFermatTriple(const Natural& a, const Natural& b, const Natural& c) {
    if (a.isZero() || b.isZero() || c.isZero()) {
        throw std::domain_error("makeFermatTriple: elements must be positive");
    }
    const Natural& hi = std::max(a, b);
    const Natural& lo = std::min(a, b);
    if (c <= hi) {
        throw OrderingError("makeFermatTriple: requires c > max(a, b), got c = " + c.toString());
    }
    const Natural g = gcd3(hi, lo, c);
    if (g != Natural(1)) throw NonPrimitiveError(g);
    return FermatTriple(hi, lo, c);
}

FormTag classifyForm(const FermatTriple& t) {
    const int evenCount = int(t.a().isEven()) + int(t.b().isEven()) + int(t.c().isEven());
    if (evenCount != 1) {
        throw std::domain_error("classifyForm: expected exactly one even element, found " +
                                std::to_string(evenCount));
    }
    if (t.c().isEven()) return {FormVariant::CEven, twoAdicSplit(t.c())};
    if (t.b().isEven()) return {FormVariant::BEven, twoAdicSplit(t.b())};
    return {FormVariant::AEven, twoAdicSplit(t.a())};
}

PythTriple pythFromParam(const PythParam& pp) {
    const Natural p2 = pp.p * pp.p;
    const Natural q2 = pp.q * pp.q;
    return {p2 - q2, Natural(2) * pp.p * pp.q, p2 + q2};
}

std::vector<PythTriple> enumPrimitivePythagorean(const Natural& hypLimit) {
    std::vector<PythTriple> out;
    for (unsigned long p = 2; Natural(p) * Natural(p) + Natural(1) <= hypLimit; ++p) {
        for (unsigned long q = 1 + (p % 2); q < p; q += 2) {  // opposite parity
            if (std::gcd(p, q) != 1) continue;
            PythTriple t = pythFromParam(PythParam(Natural(p), Natural(q)));
            if (t.hyp > hypLimit) break;
            if (t.leg1 > t.leg2) std::swap(t.leg1, t.leg2);
            out.push_back(std::move(t));
        }
    }
    std::sort(out.begin(), out.end(), [](const PythTriple& x, const PythTriple& y) {
        return std::tie(x.hyp, x.leg1) < std::tie(y.hyp, y.leg1);
    });
    return out;
}

bool isPythagorean(const Natural& x, const Natural& y, const Natural& z) {
    return x * x + y * y == z * z;
}

}  // namespace fermatlab
