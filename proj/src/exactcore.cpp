#include "fermatlab/exactcore.hpp"

namespace fermatlab {

Natural Natural::fromString(const std::string& decimal) {
    mpz_class z;
    if (z.set_str(decimal, 10) != 0) {
        throw std::domain_error("Natural: malformed decimal string '" + decimal + "'");
    }
    return Natural(z);
}

Natural gcd(const Natural& a, const Natural& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Natural(g);
}

Ratio Ratio::pow(const Natural& exp) const {
    return Ratio(powBig(numerator(), exp), powBig(denominator(), exp));
}

std::string Ratio::toString() const {
    if (isInteger()) return numerator().toString();
    return numerator().toString() + "/" + denominator().toString();
}

Natural TwoAdicForm::recompose() const {
    return powBig(Natural(2), k) * d;
}

Natural gcd3(const Natural& a, const Natural& b, const Natural& c) {
    if (a.isZero() || b.isZero() || c.isZero()) {
        throw std::domain_error("gcd3: inputs must be positive");
    }
    return gcd(gcd(a, b), c);
}

TwoAdicForm twoAdicSplit(const Natural& m) {
    if (m.isZero()) throw std::domain_error("twoAdicSplit: input must be positive");
    const mp_bitcnt_t k = mpz_scan1(m.raw().get_mpz_t(), 0);
    mpz_class d;
    mpz_tdiv_q_2exp(d.get_mpz_t(), m.raw().get_mpz_t(), k);
    return TwoAdicForm(Natural(static_cast<unsigned long>(k)), Natural(d));
}

Natural powBig(const Natural& base, const Natural& exp) {
    if (exp.raw().fits_ulong_p()) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exp.toULong());
        return Natural(r);
    }
    // Exponents beyond unsigned long only terminate for trivial bases.
    if (base.isZero()) return Natural(0);
    if (base == Natural(1)) return Natural(1);
    throw std::domain_error("powBig: exponent too large");
}

RootResult intNthRoot(const Natural& s, const Natural& n) {
    if (n.isZero()) throw std::domain_error("intNthRoot: zeroth root undefined");
    if (s.isZero()) throw std::domain_error("intNthRoot: input must be positive");
    if (n == Natural(1)) return {s, true};

    const unsigned long e = n.toULong();

    // s < 2^B implies floor(s^(1/n)) < 2^ceil(B/n); bracket [1, 2^ceil(B/n)].
    const std::size_t bits = s.bitLength();
    mpz_class lo = 1;
    mpz_class hi;
    mpz_ui_pow_ui(hi.get_mpz_t(), 2, static_cast<unsigned long>((bits + e - 1) / e));

    // Largest r with r^e <= s.
    mpz_class mid, p;
    while (lo < hi) {
        mid = lo + (hi - lo + 1) / 2;
        mpz_pow_ui(p.get_mpz_t(), mid.get_mpz_t(), e);
        if (p <= s.raw()) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    mpz_pow_ui(p.get_mpz_t(), lo.get_mpz_t(), e);
    return {Natural(lo), p == s.raw()};
}

bool isPerfectSquare(const Natural& m) {
    if (m.isZero()) throw std::domain_error("isPerfectSquare: input must be positive");
    return intNthRoot(m, Natural(2)).exact;
}

}  // namespace fermatlab
