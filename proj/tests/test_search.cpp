#include <doctest.h>

#include <random>

#include "dilate/constructions.hpp"
#include "dilate/search.hpp"
#include "oracles.hpp"

using namespace dilate;

namespace {

SearchSpec spec_for(const IntMatrix& l1, const IntMatrix& l2, std::size_t n, const std::string& box,
                    unsigned workers = 1) {
    SearchSpec s;
    s.l1 = l1;
    s.l2 = l2;
    s.n = n;
    s.box = parse_box(box);
    s.workers = workers;
    return s;
}

void check_witness(const SearchSpec& s, const SearchResult& r) {
    CHECK(r.witness.size() == s.n);
    CHECK(transform_sumset(s.l1, s.l2, r.witness).size() == r.minimum);
    const auto [lo, hi] = r.witness.bounding_box();
    CHECK(lo == s.box.lo);
    for (std::size_t j = 0; j < hi.size(); ++j) CHECK(hi[j] <= s.box.hi[j]);
}

ErrorCode code_of(const SearchSpec& s) {
    try {
        minimize(s);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("box and strategy text") {
    const Box b = parse_box("0:3, -1:2");
    CHECK(b.lo == Point{0, -1});
    CHECK(b.hi == Point{3, 2});
    CHECK(b.volume() == 16);
    CHECK(format_box(b) == "0:3,-1:2");
    CHECK_THROWS_AS(parse_box("0:3,1"), Error);
    CHECK_THROWS_AS(parse_box("3:0"), Error);
    SearchSpec s;
    parse_strategy("anneal:500:7", s);
    CHECK(s.strategy == Strategy::Anneal);
    CHECK(s.budget == 500);
    CHECK(s.seed == 7);
    CHECK(format_strategy(s) == "anneal:500:7");
    parse_strategy("exhaustive", s);
    CHECK(s.strategy == Strategy::Exhaustive);
    CHECK_THROWS_AS(parse_strategy("random:5", s), Error);
    CHECK_THROWS_AS(parse_strategy("greedy", s), Error);
}

TEST_CASE("sums of dilates in one dimension") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const SearchSpec s = spec_for(IntMatrix{{1}}, IntMatrix{{2}}, n, "0:12");
        const SearchResult r = minimize(s);
        CHECK(r.exact);
        CHECK(r.minimum == 3 * n - 2);
        check_witness(s, r);
    }
    const SearchResult four = minimize(spec_for(IntMatrix{{1}}, IntMatrix{{2}}, 4, "0:12"));
    CHECK(four.witness.points() == std::vector<Point>{{0}, {1}, {2}, {3}});
}

TEST_CASE("rotation in the plane") {
    const SearchSpec s = spec_for(IntMatrix::identity(2), rotation90(), 4, "0:3,0:3");
    const SearchResult r = minimize(s);
    CHECK(r.minimum == 9);
    CHECK(r.witness == grid_box({2, 2}));
    check_witness(s, r);
}

TEST_CASE("a single point") {
    const SearchResult r = minimize(spec_for(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{0, -1}, {2, 0}}, 1, "-2:2,5:9"));
    CHECK(r.minimum == 1);
    CHECK(r.witness.points() == std::vector<Point>{{-2, 5}});
}

TEST_CASE("exhaustive search agrees with plain enumeration") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 40; ++t) {
        const std::size_t d = 1 + t % 2;
        const IntMatrix l1 = oracle::random_matrix(rng, d, -2, 2), l2 = oracle::random_matrix(rng, d, -2, 2);
        const std::string box = d == 1 ? "0:7" : "0:2,-1:1";
        const std::size_t n = 2 + t % 3;
        const SearchSpec s = spec_for(l1, l2, n, box, 1 + t % 3);
        const SearchResult r = minimize(s);
        CHECK(r.minimum == oracle::naive_minimum(l1, l2, n, s.box.lo, s.box.hi));
        check_witness(s, r);
    }
}

TEST_CASE("exhaustive results do not depend on the worker count") {
    const std::vector<SearchSpec> specs{
        spec_for(IntMatrix::identity(2), IntMatrix{{0, 2}, {1, 0}}, 5, "0:4,0:4"),
        spec_for(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{0, -1}, {2, 0}}, 4, "0:3,0:3"),
        spec_for(IntMatrix{{1}}, IntMatrix{{3}}, 5, "0:14"),
    };
    for (SearchSpec s : specs) {
        s.workers = 1;
        const SearchResult base = minimize(s);
        for (unsigned w : {4u, 16u}) {
            s.workers = w;
            const SearchResult r = minimize(s);
            CHECK(r.minimum == base.minimum);
            CHECK(r.witness == base.witness);
            CHECK(r.exact);
        }
    }
}

TEST_CASE("heuristics never beat the exact minimum") {
    const std::vector<SearchSpec> specs{
        spec_for(IntMatrix::identity(2), IntMatrix{{0, 2}, {1, 0}}, 5, "0:3,0:3"),
        spec_for(IntMatrix{{1}}, IntMatrix{{2}}, 5, "0:12"),
        spec_for(IntMatrix::identity(2), rotation90(), 4, "0:3,0:3"),
    };
    for (SearchSpec s : specs) {
        const std::size_t exact = minimize(s).minimum;
        for (const char* strategy : {"random:300:1", "random:300:2", "anneal:3000:1", "anneal:3000:9"}) {
            parse_strategy(strategy, s);
            const SearchResult r = minimize(s);
            CHECK_FALSE(r.exact);
            CHECK(r.minimum >= exact);
            check_witness(s, r);
            // same seed, same answer
            const SearchResult again = minimize(s);
            CHECK(again.minimum == r.minimum);
            CHECK(again.witness == r.witness);
        }
        s.strategy = Strategy::Exhaustive;
    }
}

TEST_CASE("root-two minima grow with n") {
    std::size_t prev_num = 0, prev_den = 1;
    for (std::size_t n = 1; n <= 6; ++n) {
        const SearchResult r = minimize(spec_for(IntMatrix::identity(2), IntMatrix{{0, 2}, {1, 0}}, n, "0:3,0:3"));
        CHECK(r.minimum >= n);
        // minimum(n)/n is nondecreasing over this range
        CHECK(r.minimum * prev_den >= prev_num * n);
        prev_num = r.minimum;
        prev_den = n;
    }
}

TEST_CASE("search errors") {
    CHECK(code_of(spec_for(IntMatrix{{1}}, IntMatrix{{2}}, 5, "0:3")) == ErrorCode::Infeasible);
    CHECK(code_of(spec_for(IntMatrix{{1}}, IntMatrix{{2}}, 20, "0:40")) == ErrorCode::BudgetExceeded);
    CHECK(code_of(spec_for(IntMatrix{{1}}, IntMatrix{{2}}, 0, "0:4")) == ErrorCode::InvalidArgument);
    CHECK(code_of(spec_for(IntMatrix::identity(2), IntMatrix::identity(2), 2, "0:4")) == ErrorCode::DimensionMismatch);
    SearchSpec s = spec_for(IntMatrix{{1}}, IntMatrix{{2}}, 3, "0:9");
    s.strategy = Strategy::Random;
    s.budget = 0;
    CHECK(code_of(s) == ErrorCode::InvalidArgument);
}

TEST_CASE("translate normalization") {
    const PointSet a = PointSet::from_points(2, {{5, 7}, {6, 9}, {8, 8}});
    CHECK(normalize_translate(a, {0, 0}) == PointSet::from_points(2, {{0, 0}, {1, 2}, {3, 1}}));
}
