#include "dilate/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "dilate/classify.hpp"

namespace dilate {

namespace {

void require_positive(double x, const char* what) {
    if (!(x > 0) || !std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
}

void require_nonnegative(double x, const char* what) {
    if (!(x >= 0) || !std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be nonnegative");
}

}  // namespace

BootstrapState identity_state(unsigned d, std::uint64_t k, double sigma1, double D, double alpha0, double d1) {
    if (d == 0 || k == 0) throw Error(ErrorCode::InvalidArgument, "d and k must be positive");
    require_positive(sigma1, "sigma1");
    require_nonnegative(D, "D");
    require_positive(alpha0, "alpha0");
    require_nonnegative(d1, "D1");
    BootstrapState s;
    s.d = d;
    s.k = k;
    s.sigma1 = sigma1;
    s.D = D;
    s.alpha = alpha0;
    s.d1 = d1;
    return s;
}

BootstrapState pair_state(unsigned d, std::uint64_t p, std::uint64_t q, double sigma1, double D, double alpha0, double d1) {
    if (d == 0 || p == 0 || q == 0) throw Error(ErrorCode::InvalidArgument, "d, p and q must be positive");
    require_positive(sigma1, "sigma1");
    require_nonnegative(D, "D");
    require_positive(alpha0, "alpha0");
    require_nonnegative(d1, "D1");
    BootstrapState s;
    s.d = d;
    s.p = p;
    s.q = q;
    s.sigma1 = sigma1;
    s.D = D;
    s.alpha = alpha0;
    s.d1 = d1;
    s.c = pair_constant(p, q, d, 128).mid_double();
    return s;
}

BootstrapState bootstrap_step_identity(const BootstrapState& s) {
    if (!s.k) throw Error(ErrorCode::InvalidArgument, "identity step needs k");
    if (!(s.alpha > 0)) throw Error(ErrorCode::InvalidArgument, "deficit must be positive");
    const double k2 = static_cast<double>(*s.k) * static_cast<double>(*s.k);
    BootstrapState t = s;
    t.alpha = std::max(s.alpha - 1 / k2, s.alpha * (k2 - 1) / k2);
    t.d1 = s.D + k2 * s.d1;
    ++t.m;
    return t;
}

BootstrapState bootstrap_step_pair(const BootstrapState& s) {
    if (!(s.alpha > 0)) throw Error(ErrorCode::InvalidArgument, "deficit must be positive");
    const double p = static_cast<double>(s.p), q = static_cast<double>(s.q);
    BootstrapState t = s;
    t.alpha = (1 - s.c * s.c) * s.alpha;
    t.d1 = 4 * p * p * q * q * s.d1 + s.D;
    ++t.m;
    return t;
}

Interval pair_constant(std::uint64_t p, std::uint64_t q, unsigned d, unsigned bits) {
    const Interval b = bound_coefficient(Integer(p), Integer(q), d, make_rational(1, Integer(1) << bits));
    const Interval denom = Interval(Rational(2 * Integer(std::max(p, q)))) * b * b;
    return (Interval(Rational(1)) / denom).rounded(bits);
}

FinalConstants final_constants_identity(unsigned d, std::uint64_t k, double sigma1, double D, double eps, double d2_prime) {
    if (d == 0 || k == 0) throw Error(ErrorCode::InvalidArgument, "d and k must be positive");
    require_positive(sigma1, "sigma1");
    require_positive(D, "D");
    require_positive(eps, "eps");
    require_positive(d2_prime, "D2'");
    double sigma2 = sigma1 / 2;
    if (k > 1) {
        const double k2 = static_cast<double>(k) * static_cast<double>(k);
        sigma2 = std::min(sigma2, sigma1 * (std::log(k2) - std::log(k2 - 1)) / (2 * std::log(k2 + 1)));
    }
    return {sigma2, eps + d2_prime};
}

double extracted_sigma2(std::uint64_t k, double sigma1, std::uint64_t m1, std::uint64_t m2) {
    if (k < 2) return sigma1 / 2;
    if (m2 <= m1) throw Error(ErrorCode::InvalidArgument, "need m2 > m1");
    const double k2 = static_cast<double>(k) * static_cast<double>(k);
    BootstrapState s = identity_state(1, k, sigma1, 1, 1, 0);
    double log_alpha1 = 0;
    while (s.m < m2) {
        s = bootstrap_step_identity(s);
        if (s.m == m1) log_alpha1 = std::log(s.alpha);
    }
    const double log_alpha = std::log(s.alpha);
    const double log_a1 = 2 * static_cast<double>(m1) * std::log(k2 + 1) / sigma1;
    const double log_a2 = 2 * static_cast<double>(m2) * std::log(k2 + 1) / sigma1;
    const double slope = -(log_alpha - log_alpha1) / (log_a2 - log_a1);
    return std::min(sigma1 / 2, slope);
}

std::uint64_t iteration_count(double log_size, std::uint64_t k, double sigma1) {
    require_positive(sigma1, "sigma1");
    if (k == 0 || !(log_size >= 0)) throw Error(ErrorCode::InvalidArgument, "need k >= 1 and log|A| >= 0");
    const double k2 = static_cast<double>(k) * static_cast<double>(k);
    return static_cast<std::uint64_t>(std::floor(sigma1 * log_size / (2 * std::log(k2 + 1))));
}

std::uint64_t steps_until(BootstrapState s, double eps) {
    require_positive(eps, "eps");
    while (s.alpha >= eps) s = s.k ? bootstrap_step_identity(s) : bootstrap_step_pair(s);
    return s.m;
}

std::uint64_t closed_form_steps(double alpha0, double eps, std::uint64_t k) {
    require_positive(alpha0, "alpha0");
    require_positive(eps, "eps");
    if (k < 2) throw Error(ErrorCode::InvalidArgument, "closed form needs k >= 2");
    if (alpha0 < eps) return 0;
    const double k2 = static_cast<double>(k) * static_cast<double>(k);
    return static_cast<std::uint64_t>(std::ceil(std::log(alpha0 / eps) / std::log(k2 / (k2 - 1))));
}

}  // namespace dilate
