#include "dilate/report_json.hpp"

namespace dilate {

namespace {

const char* ordering_name(Ordering o) {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Greater: return "greater";
        case Ordering::Overlap: return "overlap";
    }
    return "unknown";
}

Json polynomial_json(const RatPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
    return a;
}

Json polynomial_json(const IntPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(integer_json(c));
    return a;
}

}  // namespace

Json integer_json(const Integer& x) {
    if (fits_int64(x)) return to_int64(x);
    return x.get_str();
}

Json rational_json(const Rational& x) { return to_string(x); }

Json interval_json(const Interval& x) {
    const unsigned digits = decimal_digits_for_bits(default_precision_bits());
    return Json::array({x.lo_decimal(digits), x.hi_decimal(digits)});
}

Json point_json(std::span<const std::int64_t> p) { return Json(std::vector<std::int64_t>(p.begin(), p.end())); }

Json points_json(const PointSet& a) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) arr.push_back(point_json(a.point(i)));
    return arr;
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["d"] = r.d;
    j["p"] = integer_json(r.p);
    j["q"] = integer_json(r.q);
    j["invertible"] = Json::array({r.invertible_l1, r.invertible_l2});
    j["irreducible"] = r.irreducibility.irreducible;
    j["coprime"] = r.coprime ? Json(*r.coprime) : Json(nullptr);
    j["char_poly"] = r.char_poly ? polynomial_json(*r.char_poly) : Json(nullptr);
    j["c_prime"] = r.c_prime ? integer_json(*r.c_prime) : Json(nullptr);
    j["bound"] = r.bound ? interval_json(*r.bound) : Json(nullptr);
    j["h"] = r.h ? interval_json(r.h->value) : Json(nullptr);
    j["h_vs_bound"] = r.holder ? Json(ordering_name(*r.holder)) : Json(nullptr);
    j["h_for_non_coprime"] = r.h_for_non_coprime;
    Json cert;
    cert["irreducible"] = r.irreducibility.certificate;
    cert["primitive_char_poly"] =
        r.irreducibility.primitive_char_poly ? polynomial_json(*r.irreducibility.primitive_char_poly) : Json(nullptr);
    if (r.coprime) cert["coprime"] = {{"c_prime", integer_json(*r.c_prime)}, {"det_l1", integer_json(r.p)}};
    else cert["coprime"] = nullptr;
    j["certificates"] = cert;
    return j;
}

Json to_json(const HEstimate& h) {
    Json j;
    j["polynomial"] = polynomial_json(h.polynomial);
    j["leading"] = integer_json(h.leading);
    Json roots = Json::array();
    for (std::size_t i = 0; i < h.roots.size(); ++i) {
        const auto& r = h.roots[i];
        roots.push_back({{"center", Json::array({rational_json(r.center.re), rational_json(r.center.im)})},
                         {"radius", rational_json(r.radius)},
                         {"modulus", interval_json(h.moduli[i])}});
    }
    j["roots"] = roots;
    j["h"] = interval_json(h.value);
    return j;
}

Json to_json(const BmDefect& b) {
    Json j;
    j["sumset"] = b.sumset_size;
    j["projection_total"] = b.projection_total;
    j["bound"] = interval_json(b.bound);
    j["defect"] = interval_json(b.value);
    j["bits"] = b.bits;
    j["verdict"] = to_string(b.verdict);
    return j;
}

Json to_json(const SearchResult& r, bool stats) {
    Json j;
    j["n"] = r.witness.size();
    j["minimum"] = r.minimum;
    j["ratio"] = rational_json(make_rational(Integer(static_cast<unsigned long>(r.minimum)),
                                             Integer(static_cast<unsigned long>(std::max<std::size_t>(r.witness.size(), 1)))));
    j["exact"] = r.exact;
    j["witness"] = points_json(r.witness);
    if (stats) {
        j["nodes"] = r.nodes;
        j["elapsed_seconds"] = r.elapsed_seconds;
    }
    return j;
}

Json to_json(const BootstrapState& s) {
    Json j;
    j["d"] = s.d;
    if (s.k) j["k"] = *s.k;
    else {
        j["p"] = s.p;
        j["q"] = s.q;
        j["c"] = s.c;
    }
    j["m"] = s.m;
    j["alpha"] = s.alpha;
    j["D1"] = s.d1;
    j["sigma1"] = s.sigma1;
    j["D"] = s.D;
    if (s.sigma2) j["sigma2"] = *s.sigma2;
    if (s.d2) j["D2"] = *s.d2;
    return j;
}

Json error_json(const Error& e) {
    return {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", e.witness()}}}};
}

}  // namespace dilate
