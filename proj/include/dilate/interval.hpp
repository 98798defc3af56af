#pragma once

#include <string>

#include "dilate/numeric.hpp"

namespace dilate {

/// Precision (fractional bits) used for interval enclosures unless a caller
/// asks for more. Read once from DILATE_PRECISION_BITS, default 128.
unsigned default_precision_bits();
/// Overrides the environment setting; 0 restores it.
void set_default_precision_bits(unsigned bits);

/// Closed interval [lo, hi] with exact rational endpoints. Arithmetic is exact;
/// `rounded` widens the endpoints outward onto a dyadic grid so repeated
/// operations do not grow the denominators without bound.
class Interval {
public:
    Interval() = default;
    explicit Interval(const Rational& v) : lo_(v), hi_(v) {}
    Interval(const Rational& lo, const Rational& hi);

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

    /// Outward rounding to multiples of 2^-bits.
    Interval rounded(unsigned bits) const;

    /// Enclosure of x^(1/n) for x >= 0 with endpoints on a 2^-bits grid
    /// (relative to the denominator of x); a point interval when the root is
    /// rational at that grid.
    static Interval nth_root(const Rational& x, unsigned n, unsigned bits);
    /// Enclosure of the n-th root of a nonnegative interval.
    Interval root(unsigned n, unsigned bits) const;

    Interval pow(unsigned e) const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws InvalidArgument when b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);

    bool operator==(const Interval& other) const = default;

    /// Decimal strings rounded outward: lo toward -inf, hi toward +inf.
    std::string lo_decimal(unsigned digits) const;
    std::string hi_decimal(unsigned digits) const;
    double mid_double() const;

private:
    Rational lo_ = 0;
    Rational hi_ = 0;
};

/// Number of decimal digits that carries `bits` binary digits.
unsigned decimal_digits_for_bits(unsigned bits);

/// Decimal expansion of x truncated toward -inf (round_up = false) or
/// toward +inf (round_up = true) after `digits` fractional digits.
std::string to_decimal(const Rational& x, unsigned digits, bool round_up);

enum class Ordering { Less, Greater, Overlap };

/// Less when a.hi < b.lo, Greater when a.lo > b.hi, Overlap otherwise.
Ordering compare(const Interval& a, const Interval& b);

}  // namespace dilate
