#pragma once

#include <json.hpp>

#include "dilate/bootstrap.hpp"
#include "dilate/classify.hpp"
#include "dilate/compression.hpp"
#include "dilate/error.hpp"
#include "dilate/search.hpp"

namespace dilate {

using Json = nlohmann::ordered_json;

/// JSON number when it fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer& x);
/// "p/q" string (or "p" for integers).
Json rational_json(const Rational& x);
/// [lo, hi] as decimal strings rounded outward with enough digits for the
/// current precision.
Json interval_json(const Interval& x);
Json point_json(std::span<const std::int64_t> p);
Json points_json(const PointSet& a);

Json to_json(const ClassificationReport& r);
Json to_json(const HEstimate& h);
Json to_json(const BmDefect& b);
/// Node count and elapsed time are schedule dependent and only included on request.
Json to_json(const SearchResult& r, bool stats = false);
Json to_json(const BootstrapState& s);
Json error_json(const Error& e);

}  // namespace dilate
