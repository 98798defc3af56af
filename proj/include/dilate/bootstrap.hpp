#pragma once

#include <cstdint>
#include <optional>

#include "dilate/interval.hpp"

namespace dilate {

/// Constants of the deficit-shrinking recursions. The identity variant uses
/// k (L1 = I, L2 = k I style dilates); the pair variant uses p and q.
struct BootstrapState {
    unsigned d = 1;
    std::optional<std::uint64_t> k;
    std::uint64_t p = 1, q = 1;
    double alpha = 0;  // current deficit
    double d1 = 0;     // current error coefficient
    double sigma1 = 0;
    double D = 0;
    double c = 0;      // pair constant, zero for the identity variant
    std::uint64_t m = 0;
    std::optional<double> sigma2, d2;
};

BootstrapState identity_state(unsigned d, std::uint64_t k, double sigma1, double D, double alpha0, double d1);
BootstrapState pair_state(unsigned d, std::uint64_t p, std::uint64_t q, double sigma1, double D, double alpha0, double d1);

/// alpha <- max(alpha - 1/k^2, alpha (k^2 - 1)/k^2), D1 <- D + k^2 D1.
BootstrapState bootstrap_step_identity(const BootstrapState& s);
/// alpha <- (1 - c^2) alpha, D1 <- 4 p^2 q^2 D1 + D.
BootstrapState bootstrap_step_pair(const BootstrapState& s);

/// c = 1 / (2 max(p, q) (p^(1/d) + q^(1/d))^(2d)).
Interval pair_constant(std::uint64_t p, std::uint64_t q, unsigned d, unsigned bits);

struct FinalConstants {
    double sigma2;
    double d2;
};

/// sigma2 = min(sigma1/2, sigma1 (log k^2 - log(k^2 - 1)) / (2 log(k^2 + 1))),
/// D2 = eps + D2'. For k = 1 the second term is absent.
FinalConstants final_constants_identity(unsigned d, std::uint64_t k, double sigma1, double D, double eps, double d2_prime);

/// Exponent of the deficit term read off from actual identity steps: the
/// slope of -log alpha_m against log|A| = 2 m log(k^2 + 1) / sigma1 between
/// m1 and m2 steps, combined with sigma1/2 as in the closed form.
double extracted_sigma2(std::uint64_t k, double sigma1, std::uint64_t m1 = 100, std::uint64_t m2 = 200);

/// floor(sigma1 log|A| / (2 log(k^2 + 1))); the rounding loss is absorbed by D2.
std::uint64_t iteration_count(double log_size, std::uint64_t k, double sigma1);

/// Number of steps (identity or pair, by variant) until alpha < eps.
std::uint64_t steps_until(BootstrapState s, double eps);
/// ceil(log(alpha0/eps) / log(k^2/(k^2 - 1))), valid when alpha0 <= 1.
std::uint64_t closed_form_steps(double alpha0, double eps, std::uint64_t k);

}  // namespace dilate
