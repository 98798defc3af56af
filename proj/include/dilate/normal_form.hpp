#pragma once

#include <vector>

#include "dilate/matrix.hpp"

namespace dilate {

/// M = S * D * T with S, T unimodular and D diagonal, d1 | d2 | ... | dd,
/// all di >= 0. `S_inverse` is kept so quotient maps can be evaluated
/// without a second inversion.
struct SnfDecomposition {
    IntMatrix S;
    IntMatrix D;
    IntMatrix T;
    IntMatrix S_inverse;

    std::vector<Integer> invariant_factors() const;
};

/// Smallest-absolute-value pivoting; singular input yields zero diagonal entries.
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Column Hermite normal form of the lattice generated by the columns of a
/// d x m integer matrix: upper triangular, positive diagonal, and every entry
/// right of the diagonal reduced into [0, diagonal). Throws Singular when the
/// columns do not span a rank-d lattice.
IntMatrix hermite_normal_form(const IntMatrix& generators);

/// Columns form a Z-basis of {x in Z^c : m x = 0}; zero columns when the
/// kernel is trivial.
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace dilate
