#pragma once

#include <span>
#include <vector>

#include "pacbound/ext_real.hpp"

namespace pacbound {

/// Change of variable phi_alpha(t) = -log(1 - alpha*t)/alpha, defined on
/// t < 1/alpha and extended with +inf at and beyond the domain boundary
/// (the limit as t goes up to 1/alpha). phi_alpha(t) >= t with equality
/// only at t = 0.
ExtReal phi(double alpha, double t);

/// Inverse of phi: phi_inv(alpha, u) = (1 - exp(-alpha*u))/alpha <= u.
/// Accepts u = +inf and returns the range supremum 1/alpha.
double phi_inv(double alpha, double u);

/// Modified Bernstein function g(x) = 2(exp(x) - 1 - x)/x^2 with g(0) = 1.
/// Below |x| = 1e-4 the Taylor series 1 + x/3 + x^2/12 + x^3/60 is used to
/// avoid cancellation in the direct quotient.
double bernstein_g(double x);

/// Stable log(sum(exp(terms))) by max shift. Accepts -inf entries (zero
/// weight); returns -inf only when every entry is -inf. Exact on
/// single-element input.
double log_sum_exp(std::span<const double> log_terms);

/// Mean of per-value minima with a cap: mean_capped = (1/n) sum_i min(v_i, cap).
struct CappedMean {
    double cap = 0.0;
    std::vector<double> values;
    double mean_capped = 0.0;
};

CappedMean capped_mean(std::vector<double> values, double cap);

} // namespace pacbound
