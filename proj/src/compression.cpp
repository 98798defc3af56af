#include "dilate/compression.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dilate {

namespace {

Rational pow2_neg(unsigned bits) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, bits);
    return make_rational(1, p);
}

long double coordinate_sum(const PointSet& c) {
    long double s = 0;
    for (auto x : c.flat()) s += static_cast<long double>(x);
    return s;
}

bool nonnegative(const PointSet& c) {
    return std::all_of(c.flat().begin(), c.flat().end(), [](std::int64_t x) { return x >= 0; });
}

}  // namespace

CompressionBasis::CompressionBasis(RatMatrix columns) : columns_(std::move(columns)) {
    require_square(columns_, "compression basis");
    inverse_ = inverse(columns_);
    standard_ = columns_ == RatMatrix::identity(columns_.dim());
}

CompressionBasis CompressionBasis::standard(std::size_t d) { return CompressionBasis(RatMatrix::identity(d)); }

PointSet CompressionBasis::to_coordinates(const PointSet& a) const {
    if (a.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "basis and point set differ in dimension");
    if (standard_) return a;
    const std::size_t d = dim();
    std::vector<std::int64_t> flat;
    flat.reserve(a.flat().size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto p = a.point(k);
        for (std::size_t i = 0; i < d; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < d; ++j) acc += inverse_(i, j) * Rational(static_cast<long>(p[j]));
            if (!is_integer(acc) || !fits_int64(acc.get_num()))
                throw Error(ErrorCode::NotIntegral, "point has non-integral coordinates in the basis",
                            format_point(p));
            flat.push_back(to_int64(acc.get_num()));
        }
    }
    return PointSet(d, std::move(flat));
}

PointSet CompressionBasis::from_coordinates(const PointSet& c) const {
    if (c.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "basis and point set differ in dimension");
    if (standard_) return c;
    const std::size_t d = dim();
    std::vector<std::int64_t> flat;
    flat.reserve(c.flat().size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        auto p = c.point(k);
        for (std::size_t i = 0; i < d; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < d; ++j) acc += columns_(i, j) * Rational(static_cast<long>(p[j]));
            if (!is_integer(acc) || !fits_int64(acc.get_num()))
                throw Error(ErrorCode::NotIntegral, "point is not integral in standard coordinates", format_point(p));
            flat.push_back(to_int64(acc.get_num()));
        }
    }
    return PointSet(d, std::move(flat));
}

PointSet compress_axis(const PointSet& coords, std::size_t axis) {
    const std::size_t d = coords.dim();
    if (axis >= d) throw Error(ErrorCode::InvalidArgument, "compression axis out of range");
    std::map<Point, std::int64_t> fibers;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        auto p = coords.point(k);
        Point key(p.begin(), p.end());
        key.erase(key.begin() + static_cast<std::ptrdiff_t>(axis));
        ++fibers[key];
    }
    std::vector<std::int64_t> flat;
    flat.reserve(coords.flat().size());
    for (const auto& [key, count] : fibers)
        for (std::int64_t t = 0; t < count; ++t) {
            Point p = key;
            p.insert(p.begin() + static_cast<std::ptrdiff_t>(axis), t);
            flat.insert(flat.end(), p.begin(), p.end());
        }
    return PointSet(d, std::move(flat));
}

PointSet i_compress(const PointSet& a, std::size_t axis, const CompressionBasis& basis) {
    return compress_axis(basis.to_coordinates(a), axis);
}

bool is_compressed(const PointSet& a) {
    if (!nonnegative(a)) throw Error(ErrorCode::InvalidArgument, "compressed-set test needs nonnegative coordinates");
    Point q(a.dim());
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto p = a.point(k);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (p[i] == 0) continue;
            std::copy(p.begin(), p.end(), q.begin());
            --q[i];
            if (!a.contains(q)) return false;
        }
    }
    return true;
}

PointSet full_compress(const PointSet& a, const CompressionBasis& basis) {
    PointSet c = basis.to_coordinates(a);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < c.dim(); ++i) {
            PointSet next = compress_axis(c, i);
            if (next == c) continue;
            // Once every coordinate is nonnegative each effective compression
            // lowers the coordinate sum, which bounds the number of sweeps.
            if (nonnegative(c) && !(coordinate_sum(next) < coordinate_sum(c)))
                throw std::logic_error("compression did not decrease the coordinate sum");
            c = std::move(next);
            changed = true;
        }
    }
    return c;
}

std::vector<std::size_t> proper_projection_sizes(const PointSet& s, const CompressionBasis& basis) {
    const std::size_t d = s.dim();
    if (basis.dim() != d) throw Error(ErrorCode::DimensionMismatch, "basis and point set differ in dimension");
    const std::size_t full = (std::size_t(1) << d) - 1;
    std::vector<std::size_t> sizes(full, 0);
    if (s.empty()) return sizes;
    if (basis.is_standard()) {
        for (std::size_t mask = 0; mask < full; ++mask) {
            std::set<Point> seen;
            Point key;
            for (std::size_t k = 0; k < s.size(); ++k) {
                auto p = s.point(k);
                key.clear();
                for (std::size_t i = 0; i < d; ++i)
                    if (mask >> i & 1) key.push_back(p[i]);
                seen.insert(key);
            }
            sizes[mask] = seen.size();
        }
        return sizes;
    }
    // General basis: count distinct tuples of rational basis coordinates.
    const RatMatrix inv = inverse(basis.columns());
    std::vector<RatVector> coords;
    coords.reserve(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        auto p = s.point(k);
        RatVector c(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) c[i] += inv(i, j) * Rational(static_cast<long>(p[j]));
        coords.push_back(std::move(c));
    }
    auto less = [](const RatVector& x, const RatVector& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                            [](const Rational& u, const Rational& v) { return cmp(u, v) < 0; });
    };
    for (std::size_t mask = 0; mask < full; ++mask) {
        std::set<RatVector, decltype(less)> seen(less);
        for (const auto& c : coords) {
            RatVector key;
            for (std::size_t i = 0; i < d; ++i)
                if (mask >> i & 1) key.push_back(c[i]);
            seen.insert(std::move(key));
        }
        sizes[mask] = seen.size();
    }
    return sizes;
}

const char* to_string(DefectVerdict v) {
    switch (v) {
        case DefectVerdict::Nonnegative: return "nonnegative";
        case DefectVerdict::NonnegativeWithin: return "nonnegative_within_2^-64";
        case DefectVerdict::Negative: return "negative";
    }
    return "unknown";
}

BmDefect bm_defect(const PointSet& a, const PointSet& b, const CompressionBasis& basis) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "point sets differ in dimension");
    if (a.empty() || b.empty()) throw Error(ErrorCode::InvalidArgument, "defect of an empty set");
    const unsigned d = static_cast<unsigned>(a.dim());
    BmDefect out;
    const PointSet s = sumset(a, b);
    out.sumset_size = s.size();
    for (auto n : proper_projection_sizes(s, basis)) out.projection_total += n;
    const Rational exact = Rational(static_cast<unsigned long>(out.sumset_size + out.projection_total));
    const Rational slack = pow2_neg(64);
    for (unsigned bits = 64;; bits *= 2) {
        const Interval ra = Interval::nth_root(Rational(static_cast<unsigned long>(a.size())), d, bits);
        const Interval rb = Interval::nth_root(Rational(static_cast<unsigned long>(b.size())), d, bits);
        out.bound = (ra + rb).pow(d);
        out.value = Interval(exact) - out.bound;
        out.bits = bits;
        if (out.value.lo() >= 0) {
            out.verdict = DefectVerdict::Nonnegative;
            return out;
        }
        if (out.value.hi() < 0) {
            out.verdict = DefectVerdict::Negative;
            return out;
        }
        if (out.value.lo() >= -slack) {
            out.verdict = DefectVerdict::NonnegativeWithin;
            return out;
        }
        if (bits >= 8192) throw Error(ErrorCode::CertificationFailed, "defect enclosure did not resolve");
    }
}

}  // namespace dilate
