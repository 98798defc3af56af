#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dilate {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer binomial(unsigned long n, unsigned long k);

/// Floor division (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder in [0, |b|).
Integer mod_floor(const Integer& a, const Integer& b);

bool fits_int64(const Integer& x);
std::int64_t to_int64(const Integer& x);

/// "p" or "p/q".
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

Rational parse_rational(const std::string& text);

bool is_integer(const Rational& x);

}  // namespace dilate
