#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dilate/lattice.hpp"
#include "dilate/matrix.hpp"

namespace dilate {

using Point = std::vector<std::int64_t>;

/// Finite subset of Z^d. Points are kept sorted lexicographically and
/// deduplicated in one flat coordinate array.
class PointSet {
public:
    explicit PointSet(std::size_t d = 1);
    PointSet(std::size_t d, std::vector<std::int64_t> flat);
    static PointSet from_points(std::size_t d, const std::vector<Point>& points);

    std::size_t dim() const noexcept { return d_; }
    std::size_t size() const noexcept { return d_ ? coords_.size() / d_ : 0; }
    bool empty() const noexcept { return coords_.empty(); }

    std::span<const std::int64_t> point(std::size_t i) const { return {coords_.data() + i * d_, d_}; }
    const std::vector<std::int64_t>& flat() const noexcept { return coords_; }
    std::vector<Point> points() const;
    bool contains(std::span<const std::int64_t> p) const;

    /// Per-axis minimum and maximum; requires a nonempty set.
    std::pair<Point, Point> bounding_box() const;

    bool operator==(const PointSet& other) const = default;

private:
    void normalize();

    std::size_t d_;
    std::vector<std::int64_t> coords_;
};

/// {M a : a in A}. Throws InvalidArgument on int64 overflow.
PointSet apply(const IntMatrix& m, const PointSet& a);
/// {L a : a in A} for rational L; throws NotIntegral unless every image is integral.
PointSet apply(const RatMatrix& l, const PointSet& a);
PointSet translate(const PointSet& a, const Point& t);

/// {a + b}.
PointSet sumset(const PointSet& a, const PointSet& b);
/// L1 A + L2 A.
PointSet transform_sumset(const IntMatrix& l1, const IntMatrix& l2, const PointSet& a);

struct CosetPartition {
    PointSet base;
    Lattice lattice;
    /// (canonical coset representative, points of base in that coset), sorted
    /// by representative; empty parts are omitted.
    std::vector<std::pair<IntVector, PointSet>> parts;
};

CosetPartition coset_partition(const PointSet& a, const Lattice& lattice);

/// Image of A under sum_{i in I} c_i b_i where a = sum c_i b_i in the basis
/// given by the columns of `basis`. Axis indices are 0-based. Throws Singular
/// for a singular basis and NotIntegral when an image point is not integral.
PointSet project(const PointSet& a, const std::vector<std::size_t>& axes, const RatMatrix& basis);

/// Linearly independent rational vectors (the columns of a d x k matrix).
class SubspaceBasis {
public:
    explicit SubspaceBasis(RatMatrix columns);
    std::size_t ambient_dim() const noexcept { return columns_.rows(); }
    std::size_t dim() const noexcept { return columns_.cols(); }
    const RatMatrix& columns() const noexcept { return columns_; }

private:
    RatMatrix columns_;
};

/// Largest |A ∩ (x + U)| over all translates. Throws InvalidArgument when
/// dim U >= d.
std::size_t max_in_translate(const PointSet& a, const SubspaceBasis& u);

/// m <= s^(1 - 2^-k), decided exactly as m^(2^k) <= s^(2^k - 1).
bool concentration_bound_holds(std::size_t m, std::size_t s, unsigned k);

struct RuzsaReport {
    std::size_t a1, a2_plus_a3, a1_plus_a2, a1_plus_a3;
    bool holds;  // |A1||A2+A3| <= |A1+A2||A1+A3|
};

RuzsaReport ruzsa_triangle(const PointSet& a1, const PointSet& a2, const PointSet& a3);

struct PlunneckeReport {
    std::size_t a, c, c_plus_c;
    bool holds;  // |C+C| |A|^6 <= |C|^7 with C = A+B, K = |C|/|A|
};

PlunneckeReport plunnecke_check(const PointSet& a, const PointSet& b);

struct DoublingReport {
    std::size_t n;
    std::size_t sumset;
    Rational ratio;
};

/// |L1 A + L2 A| / |A|.
DoublingReport doubling_report(const IntMatrix& l1, const IntMatrix& l2, const PointSet& a);
/// |A + L A| / |A| for rational L; throws NotIntegral unless L A ⊂ Z^d.
DoublingReport doubling_report(const RatMatrix& l, const PointSet& a);

/// One point per line, comma separated; '#' starts a comment; blank lines
/// are skipped. The first point fixes the dimension.
PointSet read_point_set(std::istream& in, const std::string& source = "<input>");
PointSet read_point_set_file(const std::string& path);
void write_point_set(std::ostream& out, const PointSet& a);

std::string format_point(std::span<const std::int64_t> p);

}  // namespace dilate
