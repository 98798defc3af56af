#include "dilate/numeric.hpp"

#include <limits>

#include "dilate/error.hpp"

namespace dilate {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::DimensionMismatch: return "dimension_mismatch";
        case ErrorCode::Singular: return "singular";
        case ErrorCode::NotIntegral: return "not_integral";
        case ErrorCode::Reducible: return "reducible";
        case ErrorCode::NotContained: return "not_contained";
        case ErrorCode::IllDefinedMap: return "ill_defined_map";
        case ErrorCode::CertificationFailed: return "certification_failed";
        case ErrorCode::Infeasible: return "infeasible";
        case ErrorCode::BudgetExceeded: return "budget_exceeded";
        case ErrorCode::Parse: return "parse_error";
    }
    return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    Integer r;
    Integer m = abs(b);
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool fits_int64(const Integer& x) {
    static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return x >= lo && x <= hi;
}

std::int64_t to_int64(const Integer& x) {
    if (!fits_int64(x))
        throw Error(ErrorCode::InvalidArgument, "integer does not fit in 64 bits", x.get_str());
    return std::stoll(x.get_str());
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw Error(ErrorCode::Parse, "empty number");
    if (s.front() == '+') s.erase(0, 1);
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw Error(ErrorCode::Parse, "malformed integer '" + text + "'");
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw Error(ErrorCode::Parse, "malformed rational '" + text + "'");
    return make_rational(Integer(num), Integer(den));
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace dilate
