#include "dilate/constructions.hpp"

#include "dilate/irreducible.hpp"

namespace dilate {

namespace {

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be at least 1");
}

}  // namespace

CompanionPair companion_pair(const IntPolynomial& f) {
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "companion pair of a constant polynomial");
    if (content(f) != 1) throw Error(ErrorCode::InvalidArgument, "polynomial is not primitive", to_coefficient_string(f));
    IntPolynomial g = f.leading() < 0 ? Integer(-1) * f : f;
    if (!is_irreducible_q(g)) throw Error(ErrorCode::Reducible, "polynomial is reducible over Q", to_coefficient_string(g));
    const std::size_t d = static_cast<std::size_t>(g.degree());
    CompanionPair out{g, g.leading(), IntMatrix::identity(d), IntMatrix(d, d)};
    out.l1(d - 1, d - 1) = out.b;
    for (std::size_t i = 0; i + 1 < d; ++i) out.l2(i + 1, i) = 1;
    for (std::size_t i = 0; i < d; ++i) out.l2(i, d - 1) = -g.coeff(i);
    return out;
}

IntMatrix rotation90() { return IntMatrix{{0, -1}, {1, 0}}; }

PointSet kp_box(std::int64_t m, std::int64_t n) { return grid_box({m, n}); }

PointSet skew_box(std::int64_t n) {
    require_positive(n, "n");
    std::vector<std::int64_t> flat;
    for (std::int64_t x = 1; x <= n; ++x)
        for (std::int64_t y = 1; y <= n; ++y) flat.insert(flat.end(), {x, 2 * y});
    return PointSet(2, std::move(flat));
}

PointSet rot_line(std::int64_t n) {
    require_positive(n, "n");
    std::vector<std::int64_t> flat;
    for (std::int64_t y = 1; y <= n; ++y) flat.insert(flat.end(), {0, y});
    return PointSet(2, std::move(flat));
}

PointSet grid_box(const std::vector<std::int64_t>& sides) {
    if (sides.empty()) throw Error(ErrorCode::DimensionMismatch, "box needs at least one side");
    for (auto s : sides) require_positive(s, "side length");
    const std::size_t d = sides.size();
    std::vector<std::int64_t> flat;
    Point p(d, 0);
    while (true) {
        flat.insert(flat.end(), p.begin(), p.end());
        std::size_t j = d;
        while (j > 0 && ++p[j - 1] == sides[j - 1]) p[--j] = 0;
        if (j == 0) break;
    }
    return PointSet(d, std::move(flat));
}

}  // namespace dilate
