#pragma once

#include <set>
#include <vector>

#include "dilate/polynomial.hpp"

namespace dilate {

/// Irreducibility over Q of a nonconstant integer polynomial (the content is
/// ignored). Throws InvalidArgument for constants.
bool is_irreducible_q(const IntPolynomial& p);

/// Degrees of the irreducible factors of p modulo a prime, or empty when the
/// prime divides the leading coefficient or p is not square-free modulo it.
std::vector<int> factor_degrees_mod(const IntPolynomial& p, unsigned long prime);

/// Degrees k in [1, deg p - 1] that a rational factor of p could have, judged
/// by factorization patterns modulo several small primes.
std::set<int> possible_factor_degrees(const IntPolynomial& p);

/// Mignotte bound on |b_j| for any integer factor b of p of degree k.
Integer mignotte_bound(const IntPolynomial& p, int k, int j);

/// Searches for a nontrivial integer factor of degree exactly k; returns the
/// zero polynomial when none exists.
IntPolynomial find_factor_of_degree(const IntPolynomial& p, int k);

}  // namespace dilate
