#include "pacbound/core_math.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pacbound {

ExtReal phi(double alpha, double t) {
    if (!(alpha > 0.0)) throw std::invalid_argument("phi: alpha must be > 0");
    const double at = alpha * t;
    if (at >= 1.0) return ExtReal::inf();
    return ExtReal(-std::log1p(-at) / alpha);
}

double phi_inv(double alpha, double u) {
    if (!(alpha > 0.0)) throw std::invalid_argument("phi_inv: alpha must be > 0");
    if (std::isinf(u)) {
        if (u < 0.0) throw std::invalid_argument("phi_inv: u must not be -inf");
        return 1.0 / alpha;
    }
    return -std::expm1(-alpha * u) / alpha;
}

double bernstein_g(double x) {
    if (std::abs(x) < 1e-4) {
        return 1.0 + x / 3.0 + x * x / 12.0 + x * x * x / 60.0;
    }
    return 2.0 * (std::expm1(x) - x) / (x * x);
}

double log_sum_exp(std::span<const double> log_terms) {
    if (log_terms.empty()) throw std::invalid_argument("log_sum_exp: empty input");
    if (log_terms.size() == 1) return log_terms[0];
    const double mx = *std::max_element(log_terms.begin(), log_terms.end());
    if (std::isinf(mx)) return mx; // all -inf, or a +inf term dominates
    double s = 0.0;
    for (double t : log_terms) s += std::exp(t - mx);
    return mx + std::log(s);
}

CappedMean capped_mean(std::vector<double> values, double cap) {
    if (values.empty()) throw std::invalid_argument("capped_mean: empty input");
    double s = 0.0;
    for (double v : values) s += std::min(v, cap);
    CappedMean m;
    m.cap = cap;
    m.mean_capped = s / static_cast<double>(values.size());
    m.values = std::move(values);
    return m;
}

} // namespace pacbound
