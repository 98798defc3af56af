#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilate/interval.hpp"
#include "dilate/matrix.hpp"
#include "dilate/polynomial.hpp"
#include "dilate/roots.hpp"

namespace dilate {

/// Default width for H enclosures in reports.
Rational default_h_tolerance();

struct IrreducibilityResult {
    bool irreducible = false;
    /// "singular", "char_poly_irreducible" or "char_poly_reducible".
    std::string certificate;
    /// Primitive integer clearing of char_poly(L1^-1 L2); absent when L1 is singular.
    std::optional<IntPolynomial> primitive_char_poly;
};

/// Invertible and char_poly(L1^-1 L2) irreducible over Q.
IrreducibilityResult is_irreducible_pair(const IntMatrix& l1, const IntMatrix& l2);

struct CoprimalityResult {
    bool coprime = false;
    Integer c_prime;  // minimal denominator of char_poly(L1^-1 L2)
    Integer det_l1;   // |det L1|
};

/// c' == |det L1|. Throws Reducible when the pair is not irreducible.
CoprimalityResult is_coprime_pair(const IntMatrix& l1, const IntMatrix& l2);

/// (p^(1/d) + q^(1/d))^d enclosed to width at most max_width.
Interval bound_coefficient(const Integer& p, const Integer& q, unsigned d, const Rational& max_width);
/// Same with p = |det L1|, q = |det L2|, width <= 2^-53 at the very least.
/// Throws Singular when either matrix is singular.
Interval bound_coefficient(const IntMatrix& l1, const IntMatrix& l2);

struct HEstimate {
    IntPolynomial polynomial;
    Integer leading;  // |a_d|
    std::vector<CertifiedRoot> roots;
    std::vector<Interval> moduli;
    Interval value;  // |a_d| * prod (1 + |r_i|)
};

/// H of a nonconstant content-1 polynomial, enclosed to width <= tol.
HEstimate h_value(const IntPolynomial& f, const Rational& tol);
/// h_value of the primitive clearing of char_poly(L1^-1 L2). Throws
/// Reducible when the pair is not irreducible.
HEstimate matrix_h_value(const IntMatrix& l1, const IntMatrix& l2, const Rational& tol);

struct ClassificationReport {
    std::size_t d = 0;
    Integer p, q;
    bool invertible_l1 = false, invertible_l2 = false;
    IrreducibilityResult irreducibility;
    std::optional<RatPolynomial> char_poly;
    std::optional<Integer> c_prime;
    std::optional<bool> coprime;
    std::optional<Interval> bound;
    std::optional<HEstimate> h;
    /// H was computed for an irreducible pair that is not coprime.
    bool h_for_non_coprime = false;
    /// bound vs h, when both are present.
    std::optional<Ordering> holder;
};

ClassificationReport classify(const IntMatrix& l1, const IntMatrix& l2, const Rational& h_tol = default_h_tolerance());

}  // namespace dilate
