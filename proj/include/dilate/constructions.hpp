#pragma once

#include <vector>

#include "dilate/matrix.hpp"
#include "dilate/pointset.hpp"
#include "dilate/polynomial.hpp"

namespace dilate {

/// Matrix pair whose quotient L1^-1 L2 acts as multiplication by a root of f
/// in the basis 1, x, ..., x^(d-2), b x^(d-1).
struct CompanionPair {
    IntPolynomial polynomial;  // sign normalized, positive leading coefficient
    Integer b;                 // leading coefficient
    IntMatrix l1;              // diag(1, ..., 1, b)
    IntMatrix l2;              // ones below the diagonal, last column -a_0, ..., -a_(d-1)
};

/// Throws InvalidArgument for constant or imprimitive f, Reducible when f is
/// reducible over Q.
CompanionPair companion_pair(const IntPolynomial& f);

/// Anticlockwise quarter turn [[0,-1],[1,0]].
IntMatrix rotation90();

/// {(x, y) : 0 <= x < M, 0 <= y < N}; (x, y) stands for x + y sqrt 2.
PointSet kp_box(std::int64_t m, std::int64_t n);
/// {(x, 2y) : x, y in 1..n}.
PointSet skew_box(std::int64_t n);
/// {(0, y) : y in 1..n}.
PointSet rot_line(std::int64_t n);
/// Axis-aligned box with the given side lengths, corner at the origin.
PointSet grid_box(const std::vector<std::int64_t>& sides);

}  // namespace dilate
