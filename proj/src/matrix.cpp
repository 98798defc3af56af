#include "dilate/matrix.hpp"

#include <string>

#include "dilate/polynomial.hpp"

namespace dilate {

namespace {

template <class T>
void require_square_impl(const Matrix<T>& m, const char* what) {
    if (!m.is_square() || m.rows() == 0)
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": expected a nonempty square matrix, got " + std::to_string(m.rows()) +
                        "x" + std::to_string(m.cols()));
}

}  // namespace

void require_square(const IntMatrix& m, const char* what) { require_square_impl(m, what); }
void require_square(const RatMatrix& m, const char* what) { require_square_impl(m, what); }

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

bool is_integral(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw Error(ErrorCode::NotIntegral, "matrix entry is not an integer",
                            "(" + std::to_string(i) + "," + std::to_string(j) + ")=" + to_string(m(i, j)));
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

Integer common_denominator(const RatMatrix& m) {
    Integer l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    return l;
}

Integer det(const IntMatrix& m) {
    require_square(m, "det");
    const std::size_t n = m.dim();
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational det(const RatMatrix& m) {
    require_square(m, "det");
    // Clear denominators row by row, then run the integer elimination.
    IntMatrix scaled(m.rows(), m.cols());
    Integer scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
        scale *= l;
        for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) = Integer(m(i, j) * l);
    }
    return make_rational(det(scaled), scale);
}

RatMatrix inverse(const RatMatrix& m) {
    require_square(m, "inverse");
    const std::size_t n = m.dim();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw Error(ErrorCode::Singular, "matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

RatPolynomial char_poly(const RatMatrix& m) {
    require_square(m, "char_poly");
    const std::size_t n = m.dim();
    // c_n = 1; N_k = M N_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(M N_k) / k.
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix nk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        nk = m * nk;
        for (std::size_t i = 0; i < n; ++i) nk(i, i) += c[n - k + 1];
        RatMatrix mn = m * nk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mn(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    return RatPolynomial(std::move(c));
}

RatMatrix evaluate(const RatPolynomial& p, const RatMatrix& m) {
    require_square(m, "evaluate");
    const std::size_t n = m.dim();
    RatMatrix acc(n, n);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

Rational minor(const RatMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size() || rows.empty())
        throw Error(ErrorCode::DimensionMismatch, "minor needs equally many rows and columns");
    RatMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
    return det(sub);
}

}  // namespace dilate
