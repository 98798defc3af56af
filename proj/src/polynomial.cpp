#include "dilate/polynomial.hpp"

#include "dilate/error.hpp"

namespace dilate {

RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RatPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {RatPolynomial(), a};
    std::vector<Rational> quot(a.degree() - db + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational c = rem[k + db] / b.leading();
        quot[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
    }
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial monic(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    return RatPolynomial(Rational(Rational(1) / p.leading()) * p);
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial x = a, y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Integer content(const IntPolynomial& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) g = dilate::gcd(g, c);
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Integer> c;
    for (const auto& x : p.coeffs()) c.push_back(x / g);
    return IntPolynomial(std::move(c));
}

Integer minimal_denominator(const RatPolynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "minimal denominator of the zero polynomial");
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    return l;
}

IntPolynomial clear_to_primitive(const RatPolynomial& p) {
    if (p.is_zero()) return {};
    Integer l = minimal_denominator(p);
    std::vector<Integer> c;
    for (const auto& x : p.coeffs()) c.push_back(Integer(x * l));
    return primitive_part(IntPolynomial(std::move(c)));
}

bool divides_exactly(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        if (quotient) *quotient = {};
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<Integer> rem = a.coeffs();
    const int db = b.degree();
    std::vector<Integer> quot(a.degree() - db + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
        const Integer& top = rem[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return false;
        Integer c = top / b.leading();
        quot[k] = c;
        for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    if (quotient) *quotient = IntPolynomial(std::move(quot));
    return true;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
    // Yun's algorithm over Q; each factor is scaled back to a primitive integer polynomial.
    std::vector<std::pair<IntPolynomial, int>> out;
    if (p.degree() < 1) return out;
    RatPolynomial f = monic(to_rational(p));
    RatPolynomial df = f.derivative();
    RatPolynomial a = gcd(f, df);
    RatPolynomial b = divmod(f, a).first;
    RatPolynomial c = divmod(df, a).first;
    RatPolynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RatPolynomial g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(clear_to_primitive(g), i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::string to_coefficient_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ",";
        s += to_string(p.coeffs()[i]);
    }
    return s;
}

std::string to_coefficient_string(const RatPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ",";
        s += to_string(p.coeffs()[i]);
    }
    return s;
}

std::string to_pretty_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        Integer c = p.coeffs()[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Integer m = abs(c);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (m != 1 || i == 0) s += m.get_str();
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace dilate
