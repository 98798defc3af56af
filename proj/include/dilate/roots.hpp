#pragma once

#include <complex>
#include <vector>

#include "dilate/interval.hpp"
#include "dilate/polynomial.hpp"

namespace dilate {

/// Exact complex number with rational parts.
struct GaussianRational {
    Rational re = 0;
    Rational im = 0;

    Rational norm_squared() const { return re * re + im * im; }
    std::complex<double> approx() const { return {re.get_d(), im.get_d()}; }
};

/// A root approximation `center` together with a radius such that the closed
/// disk around it contains exactly one root of the square-free factor the
/// root belongs to.
struct CertifiedRoot {
    GaussianRational center;
    Rational radius;
    int multiplicity = 1;

    /// Enclosure of |root|.
    Interval modulus(unsigned bits) const;
};

/// All complex roots of p, repeated according to multiplicity (deg p entries),
/// each certified with radius <= tol. Throws CertificationFailed when the
/// refinement does not reach tol within the internal precision cap.
std::vector<CertifiedRoot> complex_roots(const IntPolynomial& p, const Rational& tol);

/// Initial approximations for a square-free polynomial (Aberth-Ehrlich).
std::vector<std::complex<long double>> aberth_roots(const IntPolynomial& p, int max_iterations = 500);

}  // namespace dilate
