#include "dilate/classify.hpp"

#include <algorithm>

#include "dilate/irreducible.hpp"

namespace dilate {

namespace {

Rational pow2_neg(unsigned bits) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, bits);
    return make_rational(1, p);
}

// Smallest b with 2^-b <= x, for 0 < x.
unsigned bits_below(const Rational& x) {
    unsigned b = 0;
    while (pow2_neg(b) > x) ++b;
    return b;
}

void require_pair(const IntMatrix& l1, const IntMatrix& l2) {
    require_square(l1, "L1");
    require_square(l2, "L2");
    if (l1.dim() != l2.dim()) throw Error(ErrorCode::DimensionMismatch, "L1 and L2 differ in dimension");
    if (l1.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrices");
}

RatPolynomial pair_char_poly(const IntMatrix& l1, const IntMatrix& l2) {
    return char_poly(inverse(to_rational(l1)) * to_rational(l2));
}

}  // namespace

Rational default_h_tolerance() { return pow2_neg(std::max(default_precision_bits(), 64u) - 8); }

IrreducibilityResult is_irreducible_pair(const IntMatrix& l1, const IntMatrix& l2) {
    require_pair(l1, l2);
    IrreducibilityResult r;
    const bool inv1 = det(l1) != 0, inv2 = det(l2) != 0;
    if (inv1) r.primitive_char_poly = clear_to_primitive(pair_char_poly(l1, l2));
    if (!inv1 || !inv2) {
        r.certificate = "singular";
        return r;
    }
    r.irreducible = is_irreducible_q(*r.primitive_char_poly);
    r.certificate = r.irreducible ? "char_poly_irreducible" : "char_poly_reducible";
    return r;
}

CoprimalityResult is_coprime_pair(const IntMatrix& l1, const IntMatrix& l2) {
    if (!is_irreducible_pair(l1, l2).irreducible)
        throw Error(ErrorCode::Reducible, "coprimality is only decided for irreducible pairs");
    CoprimalityResult r;
    r.c_prime = minimal_denominator(pair_char_poly(l1, l2));
    r.det_l1 = abs(det(l1));
    r.coprime = r.c_prime == r.det_l1;
    return r;
}

Interval bound_coefficient(const Integer& p, const Integer& q, unsigned d, const Rational& max_width) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
    if (p <= 0 || q <= 0) throw Error(ErrorCode::Singular, "bound coefficient needs nonzero determinants");
    if (max_width <= 0) throw Error(ErrorCode::InvalidArgument, "width must be positive");
    for (unsigned bits = bits_below(max_width) + 8;; bits += 32) {
        const Interval sum = Interval::nth_root(Rational(p), d, bits) + Interval::nth_root(Rational(q), d, bits);
        const Interval b = sum.pow(d).rounded(bits + 8);
        if (b.width() <= max_width) return b;
    }
}

Interval bound_coefficient(const IntMatrix& l1, const IntMatrix& l2) {
    require_pair(l1, l2);
    const Integer p = abs(det(l1)), q = abs(det(l2));
    if (p == 0 || q == 0) throw Error(ErrorCode::Singular, "bound coefficient needs nonsingular matrices");
    return bound_coefficient(p, q, static_cast<unsigned>(l1.dim()), default_h_tolerance());
}

HEstimate h_value(const IntPolynomial& f, const Rational& tol) {
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "H of a constant polynomial");
    if (content(f) != 1) throw Error(ErrorCode::InvalidArgument, "H needs a content-1 polynomial", to_coefficient_string(f));
    if (tol <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    HEstimate h;
    h.polynomial = f;
    h.leading = abs(f.leading());
    const int n = f.degree();
    if (n == 1) {
        const Rational root = make_rational(-f.coeff(0), f.coeff(1));
        h.roots.push_back({{root, 0}, 0, 1});
        h.moduli.emplace_back(abs(root));
        h.value = Interval(Rational(h.leading + abs(f.coeff(0))));
        return h;
    }
    // Cauchy bound R on the moduli; H <= |a_d| (1 + R)^n bounds every partial
    // derivative of the product with respect to one modulus.
    Rational cauchy = 0;
    for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, Rational(make_rational(abs(f.coeff(i)), h.leading)));
    Rational scale = Rational(h.leading);
    for (int i = 0; i < n; ++i) scale *= 2 + cauchy;
    Rational radius = tol / (4 * n * scale);
    for (int attempt = 0; attempt < 12; ++attempt, radius /= 256) {
        const unsigned bits = bits_below(radius) + 4;
        h.roots = complex_roots(f, radius);
        h.moduli.clear();
        Interval value(Rational(h.leading));
        for (const auto& r : h.roots) {
            h.moduli.push_back(r.modulus(bits).rounded(bits));
            value = (value * (Interval(Rational(1)) + h.moduli.back())).rounded(bits + 8);
        }
        h.value = value;
        if (value.width() <= tol) return h;
    }
    throw Error(ErrorCode::CertificationFailed, "H enclosure did not reach the requested width", to_string(tol));
}

HEstimate matrix_h_value(const IntMatrix& l1, const IntMatrix& l2, const Rational& tol) {
    const auto irr = is_irreducible_pair(l1, l2);
    if (!irr.irreducible) throw Error(ErrorCode::Reducible, "H is only defined here for irreducible pairs", irr.certificate);
    return h_value(*irr.primitive_char_poly, tol);
}

ClassificationReport classify(const IntMatrix& l1, const IntMatrix& l2, const Rational& h_tol) {
    require_pair(l1, l2);
    ClassificationReport r;
    r.d = l1.dim();
    r.p = abs(det(l1));
    r.q = abs(det(l2));
    r.invertible_l1 = r.p != 0;
    r.invertible_l2 = r.q != 0;
    r.irreducibility = is_irreducible_pair(l1, l2);
    if (r.invertible_l1) {
        r.char_poly = pair_char_poly(l1, l2);
        r.c_prime = minimal_denominator(*r.char_poly);
    }
    if (r.invertible_l1 && r.invertible_l2)
        r.bound = bound_coefficient(r.p, r.q, static_cast<unsigned>(r.d), default_h_tolerance());
    if (r.irreducibility.irreducible) {
        r.coprime = *r.c_prime == r.p;
        r.h = h_value(*r.irreducibility.primitive_char_poly, h_tol);
        r.h_for_non_coprime = !*r.coprime;
        r.holder = compare(r.h->value, *r.bound);
    }
    return r;
}

}  // namespace dilate
