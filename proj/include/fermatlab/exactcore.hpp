#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fermatlab {

/// Unbounded nonnegative integer. All exact arithmetic in the toolkit rides
/// on this type; any operation that would leave the nonnegative range throws
/// std::domain_error.
class Natural {
public:
    Natural() : v_(0) {}

    template <std::integral T>
    Natural(T x) {
        if constexpr (std::is_signed_v<T>) {
            if (x < 0) throw std::domain_error("Natural: negative value");
        }
        v_ = static_cast<unsigned long>(x);
    }

    explicit Natural(const mpz_class& z) : v_(z) {
        if (sgn(v_) < 0) throw std::domain_error("Natural: negative value");
    }

    static Natural fromString(const std::string& decimal);

    const mpz_class& raw() const { return v_; }

    bool isZero() const { return sgn(v_) == 0; }
    bool isOdd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    bool isEven() const { return mpz_even_p(v_.get_mpz_t()) != 0; }

    /// Number of bits in the binary representation (0 has bit length 0).
    std::size_t bitLength() const {
        return isZero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
    }

    /// Throws if the value does not fit an unsigned long.
    unsigned long toULong() const {
        if (!v_.fits_ulong_p()) throw std::domain_error("Natural: value exceeds unsigned long");
        return v_.get_ui();
    }

    double toDouble() const { return v_.get_d(); }
    std::string toString() const { return v_.get_str(); }

    Natural operator+(const Natural& o) const { return Natural(mpz_class(v_ + o.v_)); }
    Natural operator*(const Natural& o) const { return Natural(mpz_class(v_ * o.v_)); }

    Natural operator-(const Natural& o) const {
        if (v_ < o.v_) throw std::domain_error("Natural: subtraction underflow");
        return Natural(mpz_class(v_ - o.v_));
    }

    /// Truncating division.
    Natural operator/(const Natural& o) const {
        if (o.isZero()) throw std::domain_error("Natural: division by zero");
        return Natural(mpz_class(v_ / o.v_));
    }

    Natural operator%(const Natural& o) const {
        if (o.isZero()) throw std::domain_error("Natural: division by zero");
        return Natural(mpz_class(v_ % o.v_));
    }

    Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
    Natural& operator++() { v_ += 1; return *this; }

    bool operator==(const Natural& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Natural& o) const {
        const int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpz_class v_;
};

Natural gcd(const Natural& a, const Natural& b);

/// Exact rational, kept in lowest terms with nonnegative numerator and
/// positive denominator after every operation.
class Ratio {
public:
    Ratio() : v_(0) {}
    Ratio(const Natural& value) : v_(value.raw()) {}

    Ratio(const Natural& numerator, const Natural& denominator) {
        if (denominator.isZero()) throw std::domain_error("Ratio: zero denominator");
        v_ = mpq_class(numerator.raw(), denominator.raw());
        v_.canonicalize();
    }

    Natural numerator() const { return Natural(mpz_class(v_.get_num())); }
    Natural denominator() const { return Natural(mpz_class(v_.get_den())); }

    bool isInteger() const { return v_.get_den() == 1; }
    bool isZero() const { return sgn(v_) == 0; }

    Ratio operator+(const Ratio& o) const { return Ratio(mpq_class(v_ + o.v_)); }
    Ratio operator*(const Ratio& o) const { return Ratio(mpq_class(v_ * o.v_)); }

    Ratio operator-(const Ratio& o) const {
        mpq_class r(v_ - o.v_);
        if (sgn(r) < 0) throw std::domain_error("Ratio: subtraction underflow");
        return Ratio(r);
    }

    Ratio operator/(const Ratio& o) const {
        if (o.isZero()) throw std::domain_error("Ratio: division by zero");
        return Ratio(mpq_class(v_ / o.v_));
    }

    Ratio pow(const Natural& exp) const;

    bool operator==(const Ratio& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Ratio& o) const {
        const int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    double toDouble() const { return v_.get_d(); }

    /// "83/9" for proper fractions, plain decimal for integer values.
    std::string toString() const;

private:
    explicit Ratio(const mpq_class& q) : v_(q) {
        if (sgn(v_) < 0) throw std::domain_error("Ratio: negative value");
    }

    mpq_class v_;
};

/// A positive integer written as 2^k * d with d odd.
struct TwoAdicForm {
    Natural k;
    Natural d;

    TwoAdicForm(Natural kPart, Natural oddPart) : k(std::move(kPart)), d(std::move(oddPart)) {
        if (d.isEven()) throw std::domain_error("TwoAdicForm: d must be odd");
    }

    /// 2^k * d, the value this form decomposes.
    Natural recompose() const;

    bool operator==(const TwoAdicForm&) const = default;
};

struct RootResult {
    Natural root;   // floor(s^(1/n))
    bool exact;     // root^n == s
};

/// gcd of three positive integers; zero inputs are outside the domain.
Natural gcd3(const Natural& a, const Natural& b, const Natural& c);

/// Splits m >= 1 into 2^k * d with d odd.
TwoAdicForm twoAdicSplit(const Natural& m);

/// Floor of the n-th root of s, by binary search on exact integer powers.
/// The exact flag is decision grade: no floating point is involved.
RootResult intNthRoot(const Natural& s, const Natural& n);

/// Exact base^exp, with 0^0 defined as 1.
Natural powBig(const Natural& base, const Natural& exp);

bool isPerfectSquare(const Natural& m);

}  // namespace fermatlab
