#include "dilate/text_format.hpp"

#include <cctype>

#include "dilate/error.hpp"

namespace dilate {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return text.substr(b, e - b);
}

RatMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : split(text, ';')) {
        std::vector<Rational> r;
        for (const auto& entry : split(row, ',')) r.push_back(parse_rational(trim(entry)));
        rows.push_back(std::move(r));
    }
    const std::size_t d = rows.size();
    for (const auto& r : rows)
        if (r.size() != d)
            throw Error(ErrorCode::Parse, "matrix literal is not square", text);
    RatMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
    return m;
}

IntMatrix parse_int_matrix(const std::string& text) { return to_integer(parse_matrix(text)); }

namespace {

template <class T>
std::string format_any(const Matrix<T>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ";";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            s += to_string(m(i, j));
        }
    }
    return s;
}

}  // namespace

std::string format_matrix(const IntMatrix& m) { return format_any(m); }
std::string format_matrix(const RatMatrix& m) { return format_any(m); }

IntPolynomial parse_polynomial(const std::string& text) {
    std::vector<Integer> c;
    for (const auto& entry : split(text, ',')) {
        Rational r = parse_rational(trim(entry));
        if (!is_integer(r)) throw Error(ErrorCode::Parse, "polynomial coefficients must be integers", entry);
        c.push_back(r.get_num());
    }
    return IntPolynomial(std::move(c));
}

}  // namespace dilate
