#include "dilate/roots.hpp"

#include <algorithm>
#include <cmath>

#include "dilate/error.hpp"

namespace dilate {

namespace {

using cld = std::complex<long double>;

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) { return {a.re - b.re, a.im - b.im}; }
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational n = b.norm_squared();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
bool is_zero(const GaussianRational& z) { return z.re == 0 && z.im == 0; }

GaussianRational horner(const IntPolynomial& g, const GaussianRational& z) {
    GaussianRational acc;
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) {
        acc = acc * z;
        acc.re += *it;
    }
    return acc;
}

Rational round_to_grid(const Rational& x, unsigned bits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rational y = x * scale + Rational(1, 2);
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    return make_rational(n, scale);
}

long double to_ld(const Integer& x) { return static_cast<long double>(x.get_d()); }

std::vector<cld> aberth(const IntPolynomial& g, int max_iterations) {
    const int n = g.degree();
    std::vector<long double> a;
    for (const auto& c : g.coeffs()) a.push_back(to_ld(c));
    auto eval = [&](const cld& z, cld& value, cld& deriv) {
        value = 0;
        deriv = 0;
        for (int i = n; i >= 0; --i) {
            deriv = deriv * z + value;
            value = value * z + a[i];
        }
    };
    long double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(a[i] / a[n]));
    const long double radius = std::max<long double>(std::pow(std::fabs(a[0] / a[n]), 1.0L / n), 1e-3L);
    std::vector<cld> z(n);
    const long double two_pi = 6.283185307179586476925286766559L;
    for (int k = 0; k < n; ++k) z[k] = std::polar(std::min(radius, 1 + bound), two_pi * k / n + 0.4L);
    for (int it = 0; it < max_iterations; ++it) {
        long double largest = 0;
        for (int k = 0; k < n; ++k) {
            cld v, d;
            eval(z[k], v, d);
            if (v == cld(0)) continue;
            const cld w = v / d;
            cld s = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) s += 1.0L / (z[k] - z[j]);
            const cld step = w / (1.0L - w * s);
            z[k] -= step;
            largest = std::max(largest, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
        }
        if (largest < 1e-17L) break;
    }
    return z;
}

GaussianRational exact_of(const cld& z) {
    GaussianRational r;
    mpq_set_d(r.re.get_mpq_t(), static_cast<double>(z.real()));
    mpq_set_d(r.im.get_mpq_t(), static_cast<double>(z.imag()));
    return r;
}

// Radii n*|W_i| from the Weierstrass corrections; disjoint disks with these
// radii each hold exactly one root. Returns false if any two centers coincide
// or the disks overlap.
bool certify(const IntPolynomial& g, const std::vector<GaussianRational>& z, unsigned bits,
             std::vector<Rational>& radii) {
    const std::size_t n = z.size();
    radii.assign(n, 0);
    const Rational lc2 = Rational(g.leading() * g.leading());
    for (std::size_t i = 0; i < n; ++i) {
        GaussianRational value = horner(g, z[i]);
        if (is_zero(value)) continue;
        Rational denom = lc2;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Rational dist = (z[i] - z[j]).norm_squared();
            if (dist == 0) return false;
            denom *= dist;
        }
        const Rational w2 = value.norm_squared() / denom;
        radii[i] = Rational(static_cast<long>(n)) * Interval::nth_root(w2, 2, bits + 8).hi();
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational reach = radii[i] + radii[j];
            if ((z[i] - z[j]).norm_squared() <= reach * reach) return false;
        }
    return true;
}

std::vector<CertifiedRoot> roots_of_squarefree(const IntPolynomial& g, int multiplicity, const Rational& tol) {
    const int n = g.degree();
    if (n == 1) return {{{make_rational(-g.coeff(0), g.coeff(1)), 0}, 0, multiplicity}};
    std::vector<GaussianRational> z;
    for (const auto& r : aberth(g, 500)) z.push_back(exact_of(r));
    const IntPolynomial dg = g.derivative();
    std::vector<Rational> radii;
    for (unsigned bits = 64; bits <= 16384; bits *= 2) {
        for (int step = 0; step < 4; ++step) {
            for (auto& zi : z) {
                GaussianRational v = horner(g, zi);
                if (is_zero(v)) continue;
                GaussianRational d = horner(dg, zi);
                if (is_zero(d)) continue;
                GaussianRational next = zi - v / d;
                zi = {round_to_grid(next.re, bits), round_to_grid(next.im, bits)};
            }
        }
        if (!certify(g, z, bits, radii)) continue;
        if (std::all_of(radii.begin(), radii.end(), [&](const Rational& r) { return r <= tol; })) {
            std::vector<CertifiedRoot> out;
            for (int i = 0; i < n; ++i) out.push_back({z[i], radii[i], multiplicity});
            return out;
        }
    }
    throw Error(ErrorCode::CertificationFailed, "root refinement did not certify at the requested tolerance",
                to_coefficient_string(g));
}

}  // namespace

Interval CertifiedRoot::modulus(unsigned bits) const {
    Interval m = Interval::nth_root(center.norm_squared(), 2, bits);
    Rational lo = m.lo() - radius;
    if (lo < 0) lo = 0;
    return {lo, m.hi() + radius};
}

std::vector<std::complex<long double>> aberth_roots(const IntPolynomial& p, int max_iterations) {
    if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "roots of a constant polynomial");
    return aberth(p, max_iterations);
}

std::vector<CertifiedRoot> complex_roots(const IntPolynomial& p, const Rational& tol) {
    if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "roots of a constant polynomial");
    if (tol <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    std::vector<CertifiedRoot> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        auto roots = roots_of_squarefree(factor, mult, tol);
        for (int copy = 0; copy < mult; ++copy) out.insert(out.end(), roots.begin(), roots.end());
    }
    return out;
}

}  // namespace dilate
