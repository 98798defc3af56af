#include "dilate/pointset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "dilate/normal_form.hpp"
#include "dilate/text_format.hpp"

namespace dilate {

namespace {

constexpr unsigned __int128 kMaxIndexVolume = static_cast<unsigned __int128>(1) << 62;
constexpr std::uint64_t kMaxBitmapVolume = std::uint64_t(1) << 27;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "coordinate overflow");
    return r;
}

void require_same_dim(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "point sets differ in dimension");
}

IntVector to_int_vector(std::span<const std::int64_t> p) {
    IntVector v;
    v.reserve(p.size());
    for (auto x : p) v.emplace_back(static_cast<long>(x));
    return v;
}

std::int64_t to_coordinate(const Integer& x) {
    if (!fits_int64(x)) throw Error(ErrorCode::InvalidArgument, "coordinate overflow", x.get_str());
    return to_int64(x);
}

struct IntVectorLess {
    bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

// Sorted, duplicate-free sums via a dense bitmap or a hash set over the
// mixed-radix index of the bounding box of A + B.
PointSet indexed_sumset(const PointSet& a, const PointSet& b, const Point& lo,
                        const std::vector<std::uint64_t>& stride, std::uint64_t volume) {
    const std::size_t d = a.dim();
    auto [alo, ahi] = a.bounding_box();
    auto [blo, bhi] = b.bounding_box();
    auto offsets = [&](const PointSet& s, const Point& base) {
        std::vector<std::uint64_t> off(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto p = s.point(i);
            std::uint64_t idx = 0;
            for (std::size_t j = 0; j < d; ++j) idx += static_cast<std::uint64_t>(p[j] - base[j]) * stride[j];
            off[i] = idx;
        }
        return off;
    };
    const auto ia = offsets(a, alo);
    const auto ib = offsets(b, blo);
    std::vector<std::uint64_t> indices;
    const std::uint64_t pairs = static_cast<std::uint64_t>(ia.size()) * ib.size();
    if (volume <= kMaxBitmapVolume && volume <= 64 * pairs + 4096) {
        std::vector<std::uint64_t> bits(volume / 64 + 1, 0);
        for (auto x : ia)
            for (auto y : ib) {
                const std::uint64_t k = x + y;
                bits[k >> 6] |= std::uint64_t(1) << (k & 63);
            }
        for (std::size_t w = 0; w < bits.size(); ++w) {
            std::uint64_t word = bits[w];
            while (word) {
                indices.push_back(w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(word)));
                word &= word - 1;
            }
        }
    } else {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(pairs, std::uint64_t(1) << 26)));
        for (auto x : ia)
            for (auto y : ib) seen.insert(x + y);
        indices.assign(seen.begin(), seen.end());
        std::sort(indices.begin(), indices.end());
    }
    std::vector<std::int64_t> flat(indices.size() * d);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        std::uint64_t idx = indices[i];
        for (std::size_t j = 0; j < d; ++j) {
            flat[i * d + j] = lo[j] + static_cast<std::int64_t>(idx / stride[j]);
            idx %= stride[j];
        }
    }
    return PointSet(d, std::move(flat));
}

}  // namespace

PointSet::PointSet(std::size_t d) : d_(d) {
    if (d == 0) throw Error(ErrorCode::DimensionMismatch, "point dimension must be positive");
}

PointSet::PointSet(std::size_t d, std::vector<std::int64_t> flat) : d_(d), coords_(std::move(flat)) {
    if (d == 0) throw Error(ErrorCode::DimensionMismatch, "point dimension must be positive");
    if (coords_.size() % d != 0) throw Error(ErrorCode::DimensionMismatch, "coordinate count is not a multiple of d");
    normalize();
}

PointSet PointSet::from_points(std::size_t d, const std::vector<Point>& points) {
    std::vector<std::int64_t> flat;
    flat.reserve(points.size() * d);
    for (const auto& p : points) {
        if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "point of wrong dimension", format_point(p));
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return PointSet(d, std::move(flat));
}

void PointSet::normalize() {
    const std::size_t n = size();
    const std::size_t d = d_;
    auto less = [&](std::size_t i, std::size_t j) {
        return std::lexicographical_compare(coords_.begin() + i * d, coords_.begin() + (i + 1) * d,
                                            coords_.begin() + j * d, coords_.begin() + (j + 1) * d);
    };
    bool sorted = true;
    for (std::size_t i = 1; i < n && sorted; ++i) sorted = less(i - 1, i);
    if (sorted) return;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), less);
    std::vector<std::int64_t> out;
    out.reserve(coords_.size());
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = order[k];
        if (k > 0 && !less(order[k - 1], i)) continue;
        out.insert(out.end(), coords_.begin() + i * d, coords_.begin() + (i + 1) * d);
    }
    coords_ = std::move(out);
}

std::vector<Point> PointSet::points() const {
    std::vector<Point> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto p = point(i);
        out.emplace_back(p.begin(), p.end());
    }
    return out;
}

bool PointSet::contains(std::span<const std::int64_t> p) const {
    if (p.size() != d_) return false;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        auto q = point(mid);
        if (std::lexicographical_compare(q.begin(), q.end(), p.begin(), p.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < size() && std::equal(p.begin(), p.end(), point(lo).begin());
}

std::pair<Point, Point> PointSet::bounding_box() const {
    if (empty()) throw Error(ErrorCode::InvalidArgument, "bounding box of an empty set");
    Point lo(point(0).begin(), point(0).end()), hi = lo;
    for (std::size_t i = 1; i < size(); ++i) {
        auto p = point(i);
        for (std::size_t j = 0; j < d_; ++j) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    }
    return {lo, hi};
}

PointSet apply(const IntMatrix& m, const PointSet& a) {
    require_square(m, "apply");
    const std::size_t d = a.dim();
    if (m.dim() != d) throw Error(ErrorCode::DimensionMismatch, "matrix and point set differ in dimension");
    std::vector<std::int64_t> entries(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) entries[i * d + j] = to_coordinate(m(i, j));
    std::vector<std::int64_t> flat(a.flat().size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto p = a.point(k);
        for (std::size_t i = 0; i < d; ++i) {
            __int128 acc = 0;
            for (std::size_t j = 0; j < d; ++j) acc += static_cast<__int128>(entries[i * d + j]) * p[j];
            if (acc > INT64_MAX || acc < INT64_MIN) throw Error(ErrorCode::InvalidArgument, "coordinate overflow");
            flat[k * d + i] = static_cast<std::int64_t>(acc);
        }
    }
    return PointSet(d, std::move(flat));
}

PointSet translate(const PointSet& a, const Point& t) {
    if (t.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "translation vector of wrong dimension");
    std::vector<std::int64_t> flat = a.flat();
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = checked_add(flat[i], t[i % a.dim()]);
    return PointSet(a.dim(), std::move(flat));
}

PointSet sumset(const PointSet& a, const PointSet& b) {
    require_same_dim(a, b);
    const std::size_t d = a.dim();
    if (a.empty() || b.empty()) return PointSet(d);
    auto [alo, ahi] = a.bounding_box();
    auto [blo, bhi] = b.bounding_box();
    Point lo(d), hi(d);
    unsigned __int128 volume = 1;
    for (std::size_t j = 0; j < d; ++j) {
        lo[j] = checked_add(alo[j], blo[j]);
        hi[j] = checked_add(ahi[j], bhi[j]);
        const unsigned __int128 extent = static_cast<unsigned __int128>(static_cast<__int128>(hi[j]) - lo[j] + 1);
        volume = volume * extent;
        if (volume > kMaxIndexVolume) break;
    }
    if (volume <= kMaxIndexVolume) {
        std::vector<std::uint64_t> stride(d, 1);
        for (std::size_t j = d - 1; j-- > 0;) stride[j] = stride[j + 1] * static_cast<std::uint64_t>(hi[j + 1] - lo[j + 1] + 1);
        return indexed_sumset(a, b, lo, stride, static_cast<std::uint64_t>(volume));
    }
    std::vector<std::int64_t> flat;
    flat.reserve(a.size() * b.size() * d);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            auto p = a.point(i), q = b.point(k);
            for (std::size_t j = 0; j < d; ++j) flat.push_back(p[j] + q[j]);
        }
    return PointSet(d, std::move(flat));
}

PointSet transform_sumset(const IntMatrix& l1, const IntMatrix& l2, const PointSet& a) {
    return sumset(apply(l1, a), apply(l2, a));
}

CosetPartition coset_partition(const PointSet& a, const Lattice& lattice) {
    if (lattice.dim() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "lattice and point set differ in dimension");
    std::map<IntVector, std::vector<std::int64_t>, IntVectorLess> buckets;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto p = a.point(i);
        auto& flat = buckets[lattice.reduce(to_int_vector(p))];
        flat.insert(flat.end(), p.begin(), p.end());
    }
    CosetPartition out{a, lattice, {}};
    for (auto& [key, flat] : buckets) out.parts.emplace_back(key, PointSet(a.dim(), std::move(flat)));
    return out;
}

PointSet project(const PointSet& a, const std::vector<std::size_t>& axes, const RatMatrix& basis) {
    require_square(basis, "project");
    const std::size_t d = a.dim();
    if (basis.dim() != d) throw Error(ErrorCode::DimensionMismatch, "basis and point set differ in dimension");
    const RatMatrix inv = inverse(basis);
    std::vector<bool> keep(d, false);
    for (auto i : axes) {
        if (i >= d) throw Error(ErrorCode::InvalidArgument, "projection axis out of range");
        keep[i] = true;
    }
    // Projection matrix B diag(keep) B^-1.
    RatMatrix mask(d, d);
    for (std::size_t i = 0; i < d; ++i)
        if (keep[i]) mask(i, i) = 1;
    const RatMatrix proj = basis * mask * inv;
    std::vector<std::int64_t> flat;
    flat.reserve(a.flat().size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto p = a.point(k);
        for (std::size_t i = 0; i < d; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (proj(i, j) != 0) acc += proj(i, j) * Rational(static_cast<long>(p[j]));
            if (!is_integer(acc))
                throw Error(ErrorCode::NotIntegral, "projected point is not integral", format_point(p));
            flat.push_back(to_coordinate(acc.get_num()));
        }
    }
    return PointSet(d, std::move(flat));
}

SubspaceBasis::SubspaceBasis(RatMatrix columns) : columns_(std::move(columns)) {
    const std::size_t d = columns_.rows(), k = columns_.cols();
    if (d == 0) throw Error(ErrorCode::DimensionMismatch, "subspace in dimension zero");
    if (k > d) throw Error(ErrorCode::InvalidArgument, "more basis vectors than dimensions");
    IntMatrix scaled(d, k);
    for (std::size_t j = 0; j < k; ++j) {
        Integer l = 1;
        for (std::size_t i = 0; i < d; ++i) l = lcm(l, columns_(i, j).get_den());
        for (std::size_t i = 0; i < d; ++i) scaled(i, j) = Integer(columns_(i, j) * l);
    }
    if (k > 0 && integer_kernel(scaled).cols() != 0)
        throw Error(ErrorCode::Singular, "subspace basis vectors are linearly dependent");
}

std::size_t max_in_translate(const PointSet& a, const SubspaceBasis& u) {
    const std::size_t d = a.dim();
    if (u.ambient_dim() != d) throw Error(ErrorCode::DimensionMismatch, "subspace and point set differ in dimension");
    const std::size_t k = u.dim();
    if (k >= d) throw Error(ErrorCode::InvalidArgument, "subspace must have dimension below d");
    if (a.empty()) return 0;
    // Integer annihilator W of U: two points share a translate iff W a = W b.
    IntMatrix rows(k, d);
    for (std::size_t j = 0; j < k; ++j) {
        Integer l = 1;
        for (std::size_t i = 0; i < d; ++i) l = lcm(l, u.columns()(i, j).get_den());
        for (std::size_t i = 0; i < d; ++i) rows(j, i) = Integer(u.columns()(i, j) * l);
    }
    const IntMatrix w = k == 0 ? IntMatrix::identity(d) : integer_kernel(rows).transpose();
    std::map<IntVector, std::size_t, IntVectorLess> buckets;
    std::size_t best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t c = ++buckets[w * to_int_vector(a.point(i))];
        best = std::max(best, c);
    }
    return best;
}

bool concentration_bound_holds(std::size_t m, std::size_t s, unsigned k) {
    const unsigned long e = 1ul << k;
    Integer lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), m, e);
    mpz_ui_pow_ui(rhs.get_mpz_t(), s, e - 1);
    return lhs <= rhs;
}

RuzsaReport ruzsa_triangle(const PointSet& a1, const PointSet& a2, const PointSet& a3) {
    require_same_dim(a1, a2);
    require_same_dim(a1, a3);
    if (a1.empty() || a2.empty() || a3.empty()) throw Error(ErrorCode::InvalidArgument, "Ruzsa triangle needs nonempty sets");
    RuzsaReport r{a1.size(), sumset(a2, a3).size(), sumset(a1, a2).size(), sumset(a1, a3).size(), false};
    r.holds = Integer(static_cast<unsigned long>(r.a1)) * static_cast<unsigned long>(r.a2_plus_a3) <=
              Integer(static_cast<unsigned long>(r.a1_plus_a2)) * static_cast<unsigned long>(r.a1_plus_a3);
    return r;
}

PlunneckeReport plunnecke_check(const PointSet& a, const PointSet& b) {
    require_same_dim(a, b);
    if (a.empty() || b.empty()) throw Error(ErrorCode::InvalidArgument, "Plunnecke check needs nonempty sets");
    const PointSet c = sumset(a, b);
    PlunneckeReport r{a.size(), c.size(), sumset(c, c).size(), false};
    Integer lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), r.a, 6);
    lhs *= static_cast<unsigned long>(r.c_plus_c);
    mpz_ui_pow_ui(rhs.get_mpz_t(), r.c, 7);
    r.holds = lhs <= rhs;
    return r;
}

DoublingReport doubling_report(const IntMatrix& l1, const IntMatrix& l2, const PointSet& a) {
    if (a.empty()) throw Error(ErrorCode::InvalidArgument, "doubling of an empty set");
    const std::size_t s = transform_sumset(l1, l2, a).size();
    return {a.size(), s, make_rational(Integer(static_cast<unsigned long>(s)), Integer(static_cast<unsigned long>(a.size())))};
}

PointSet apply(const RatMatrix& l, const PointSet& a) {
    require_square(l, "apply");
    const std::size_t d = a.dim();
    if (l.dim() != d) throw Error(ErrorCode::DimensionMismatch, "matrix and point set differ in dimension");
    std::vector<std::int64_t> flat;
    flat.reserve(a.flat().size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto p = a.point(k);
        for (std::size_t i = 0; i < d; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < d; ++j) acc += l(i, j) * Rational(static_cast<long>(p[j]));
            if (!is_integer(acc)) throw Error(ErrorCode::NotIntegral, "L A is not integral", format_point(p));
            flat.push_back(to_coordinate(acc.get_num()));
        }
    }
    return PointSet(d, std::move(flat));
}

DoublingReport doubling_report(const RatMatrix& l, const PointSet& a) {
    if (a.empty()) throw Error(ErrorCode::InvalidArgument, "doubling of an empty set");
    const std::size_t s = sumset(a, apply(l, a)).size();
    return {a.size(), s, make_rational(Integer(static_cast<unsigned long>(s)), Integer(static_cast<unsigned long>(a.size())))};
}

PointSet read_point_set(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0, d = 0;
    std::vector<std::int64_t> flat;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (d == 0) d = fields.size();
        const std::string where = source + ":" + std::to_string(lineno);
        if (fields.size() != d)
            throw Error(ErrorCode::Parse, "point has " + std::to_string(fields.size()) + " coordinates, expected " +
                                              std::to_string(d), where);
        for (const auto& f : fields) {
            const std::string t = trim(f);
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
                throw Error(ErrorCode::Parse, "malformed coordinate '" + t + "'", where);
            flat.push_back(v);
        }
    }
    if (d == 0) throw Error(ErrorCode::Parse, "point set is empty", source);
    return PointSet(d, std::move(flat));
}

PointSet read_point_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open point set file", path);
    return read_point_set(in, path);
}

void write_point_set(std::ostream& out, const PointSet& a) {
    for (std::size_t i = 0; i < a.size(); ++i) out << format_point(a.point(i)) << '\n';
}

std::string format_point(std::span<const std::int64_t> p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

}  // namespace dilate
