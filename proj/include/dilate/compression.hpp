#pragma once

#include "dilate/interval.hpp"
#include "dilate/pointset.hpp"

namespace dilate {

/// Basis b_1..b_d of Q^d given as the columns of a nonsingular matrix.
class CompressionBasis {
public:
    /// Throws Singular for a singular matrix.
    explicit CompressionBasis(RatMatrix columns);
    static CompressionBasis standard(std::size_t d);

    std::size_t dim() const noexcept { return columns_.rows(); }
    const RatMatrix& columns() const noexcept { return columns_; }
    bool is_standard() const noexcept { return standard_; }

    /// Coordinates of every point in this basis; NotIntegral if any is not integral.
    PointSet to_coordinates(const PointSet& a) const;
    /// Inverse of to_coordinates.
    PointSet from_coordinates(const PointSet& c) const;

private:
    RatMatrix columns_;
    RatMatrix inverse_;
    bool standard_ = false;
};

/// Pushes every fiber along `axis` (0-based) down to 0, 1, ..., m-1.
/// Input and output are in basis coordinates.
PointSet compress_axis(const PointSet& coords, std::size_t axis);

/// The i-compression of A in the given basis, returned in basis coordinates.
PointSet i_compress(const PointSet& a, std::size_t axis, const CompressionBasis& basis);

/// Downward closed under coordinatewise domination. Throws InvalidArgument
/// on negative coordinates.
bool is_compressed(const PointSet& a);

/// Repeats compressions along axes 0, 1, ..., d-1 until nothing changes.
/// Returns basis coordinates.
PointSet full_compress(const PointSet& a, const CompressionBasis& basis);

/// Sizes of the projections of S onto span{b_i : i in I} for every proper
/// subset I of the axes, indexed by the bitmask of I.
std::vector<std::size_t> proper_projection_sizes(const PointSet& s, const CompressionBasis& basis);

enum class DefectVerdict { Nonnegative, NonnegativeWithin, Negative };
const char* to_string(DefectVerdict v);

struct BmDefect {
    std::size_t sumset_size = 0;
    std::size_t projection_total = 0;
    Interval bound;  // (|A|^(1/d) + |B|^(1/d))^d
    Interval value;  // sumset_size + projection_total - bound
    unsigned bits = 0;
    DefectVerdict verdict = DefectVerdict::Nonnegative;
};

/// Encloses |A+B| + sum_{I proper} |p_I(A+B)| - (|A|^(1/d) + |B|^(1/d))^d,
/// doubling the precision from 64 bits until the enclosure is >= 0, < 0, or
/// nonnegative up to 2^-64.
BmDefect bm_defect(const PointSet& a, const PointSet& b, const CompressionBasis& basis);

}  // namespace dilate
