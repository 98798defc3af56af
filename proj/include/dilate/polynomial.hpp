#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dilate/numeric.hpp"

namespace dilate {

/// Univariate polynomial with exact coefficients stored constant term first.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const T& c, std::size_t degree) {
        std::vector<T> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const T& leading() const { return coeffs_.back(); }
    const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    T operator()(const T& x) const {
        T acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) {
        std::vector<T> r(a.coeffs_);
        for (auto& c : r) c *= s;
        return Polynomial(std::move(r));
    }

    bool operator==(const Polynomial& other) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;

class RatPolynomial : public Polynomial<Rational> {
public:
    using Polynomial<Rational>::Polynomial;
    RatPolynomial(const Polynomial<Rational>& p) : Polynomial<Rational>(p) {}  // NOLINT
};

RatPolynomial to_rational(const IntPolynomial& p);

/// Quotient and remainder of exact division over Q.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
/// Monic gcd over Q (zero if both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial monic(const RatPolynomial& p);

/// gcd of the coefficients, zero for the zero polynomial.
Integer content(const IntPolynomial& p);
/// p / content(p) with a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Least c >= 1 with c*p integral. Throws for the zero polynomial.
Integer minimal_denominator(const RatPolynomial& p);

/// Scales p to the primitive integer polynomial with positive leading
/// coefficient that has the same roots.
IntPolynomial clear_to_primitive(const RatPolynomial& p);

/// Exact division in Z[x]; returns false when b does not divide a.
bool divides_exactly(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient = nullptr);

/// Square-free decomposition: p = c * prod_i f_i^i with each f_i primitive,
/// square-free and pairwise coprime. Entries with f_i = 1 are omitted.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

/// Coefficient list "a0,a1,...,an" (the text format used on the command line).
std::string to_coefficient_string(const IntPolynomial& p);
std::string to_coefficient_string(const RatPolynomial& p);
/// Human readable, highest degree first, e.g. "2x^2 + x - 2".
std::string to_pretty_string(const IntPolynomial& p);

}  // namespace dilate
