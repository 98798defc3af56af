#include "dilate/interval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>

#include "dilate/error.hpp"

namespace dilate {

namespace {

Integer floor_of(const Rational& x) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& x) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Rational pow2(unsigned bits) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, bits);
    return Rational(p);
}

}  // namespace

namespace {

std::atomic<unsigned>& precision_override() {
    static std::atomic<unsigned> bits{0};
    return bits;
}

}  // namespace

unsigned default_precision_bits() {
    if (const unsigned o = precision_override().load()) return o;
    static const unsigned bits = [] {
        const char* env = std::getenv("DILATE_PRECISION_BITS");
        if (!env || !*env) return 128u;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 16 || v > 65536) return 128u;
        return static_cast<unsigned>(v);
    }();
    return bits;
}

void set_default_precision_bits(unsigned bits) {
    if (bits != 0 && (bits < 16 || bits > 65536))
        throw Error(ErrorCode::InvalidArgument, "precision must be between 16 and 65536 bits", std::to_string(bits));
    precision_override().store(bits);
}

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
    if (lo_ > hi_) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
}

Interval Interval::rounded(unsigned bits) const {
    const Rational scale = pow2(bits);
    Rational lo(floor_of(lo_ * scale), scale.get_num());
    Rational hi(ceil_of(hi_ * scale), scale.get_num());
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

Interval Interval::nth_root(const Rational& x, unsigned n, unsigned bits) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "root of a negative number");
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "zeroth root");
    if (n == 1 || x == 0) return Interval(x);
    // x = a/b, so x^(1/n) = (a b^(n-1) 2^(bits n))^(1/n) / (b 2^bits).
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    Integer big;
    mpz_pow_ui(big.get_mpz_t(), b.get_mpz_t(), n - 1);
    big *= a;
    mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), static_cast<mp_bitcnt_t>(bits) * n);
    Integer r;
    const bool exact = mpz_root(r.get_mpz_t(), big.get_mpz_t(), n) != 0;
    Integer den = b;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    Rational lo = make_rational(r, den);
    if (exact) return Interval(lo);
    return {lo, make_rational(r + 1, den)};
}

Interval Interval::root(unsigned n, unsigned bits) const {
    if (lo_ < 0) throw Error(ErrorCode::InvalidArgument, "root of an interval with negative part");
    return {nth_root(lo_, n, bits).lo(), nth_root(hi_, n, bits).hi()};
}

Interval Interval::pow(unsigned e) const {
    Interval acc(Rational(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }

Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }

Interval operator*(const Interval& a, const Interval& b) {
    if (a.lo_ >= 0 && b.lo_ >= 0) return {a.lo_ * b.lo_, a.hi_ * b.hi_};
    const Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(0)) throw Error(ErrorCode::InvalidArgument, "interval division by an interval containing zero");
    return a * Interval(1 / b.hi_, 1 / b.lo_);
}

std::string Interval::lo_decimal(unsigned digits) const { return to_decimal(lo_, digits, false); }
std::string Interval::hi_decimal(unsigned digits) const { return to_decimal(hi_, digits, true); }
double Interval::mid_double() const { return midpoint().get_d(); }

unsigned decimal_digits_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * std::log10(2.0)));
}

std::string to_decimal(const Rational& x, unsigned digits, bool round_up) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational scaled = x * scale;
    Integer n = round_up ? ceil_of(scaled) : floor_of(scaled);
    const bool neg = n < 0;
    std::string s = Integer(abs(n)).get_str();
    if (digits > 0) {
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    return neg ? "-" + s : s;
}

Ordering compare(const Interval& a, const Interval& b) {
    if (a.hi() < b.lo()) return Ordering::Less;
    if (a.lo() > b.hi()) return Ordering::Greater;
    return Ordering::Overlap;
}

}  // namespace dilate
