#pragma once

#include <string>

#include "dilate/matrix.hpp"
#include "dilate/polynomial.hpp"

namespace dilate {

/// Matrix literal: rows separated by ';', entries by ',', e.g. "2,0;0,1".
/// Entries may be rationals such as "1/2". The result must be square.
RatMatrix parse_matrix(const std::string& text);
/// As parse_matrix, rejecting non-integer entries with NotIntegral.
IntMatrix parse_int_matrix(const std::string& text);

std::string format_matrix(const IntMatrix& m);
std::string format_matrix(const RatMatrix& m);

/// Coefficients from the constant term upward, e.g. "-2,0,1" for x^2 - 2.
IntPolynomial parse_polynomial(const std::string& text);

/// Splits on a separator, keeping empty pieces.
std::vector<std::string> split(const std::string& text, char sep);
std::string trim(const std::string& text);

}  // namespace dilate
