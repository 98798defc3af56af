#pragma once

#include <cstdint>
#include <string>

#include "dilate/matrix.hpp"
#include "dilate/pointset.hpp"

namespace dilate {

/// Closed integer box lo <= x <= hi.
struct Box {
    Point lo, hi;

    std::size_t dim() const noexcept { return lo.size(); }
    /// Number of lattice points; throws InvalidArgument above 2^40.
    std::uint64_t volume() const;
};

/// "x0:x1,y0:y1".
Box parse_box(const std::string& text);
std::string format_box(const Box& box);

enum class Strategy { Exhaustive, Random, Anneal };

struct SearchSpec {
    IntMatrix l1, l2;
    std::size_t n = 1;
    Box box;
    Strategy strategy = Strategy::Exhaustive;
    std::uint64_t budget = 0;  // samples (random) or steps (anneal)
    std::uint64_t seed = 0;
    unsigned workers = 0;      // 0 picks the hardware concurrency
};

/// "exhaustive", "random:COUNT:SEED" or "anneal:STEPS:SEED".
void parse_strategy(const std::string& text, SearchSpec& spec);
std::string format_strategy(const SearchSpec& spec);

struct SearchResult {
    std::size_t minimum = 0;
    /// Lexicographically least minimizer whose per-axis minimum is the box corner.
    PointSet witness;
    bool exact = false;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0;
};

/// Exhaustive search is limited to C(volume, n) <= 10^8 (BudgetExceeded) and
/// needs n <= volume (Infeasible).
SearchResult minimize(const SearchSpec& spec);

/// Translate of A whose per-axis minimum is `corner`.
PointSet normalize_translate(const PointSet& a, const Point& corner);

}  // namespace dilate
