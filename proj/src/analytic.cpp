#include "lpwan/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpwan {
namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double log_choose(std::uint32_t n, std::uint32_t k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
           std::lgamma(n - k + 1.0);
}

void check_pc_domain(double p_c, std::uint32_t n_devices) {
    if (n_devices < 2) throw std::domain_error("n_devices must be >= 2");
    if (!(p_c > 0.0 && p_c < 1.0))
        throw std::domain_error("p_c must be in (0,1)");
}

}  // namespace

double x_from_pc(double p_c, std::uint32_t n_devices) {
    if (n_devices < 2) throw std::domain_error("n_devices must be >= 2");
    if (!(p_c >= 0.0 && p_c < 1.0))
        throw std::domain_error("p_c must be in [0,1)");
    // 1 - (1-p_c)^(1/(N-1)) via expm1/log1p for small p_c accuracy
    return -std::expm1(std::log1p(-p_c) / (n_devices - 1.0));
}

double pc_from_x(double x, std::uint32_t n_devices) {
    if (n_devices < 2) throw std::domain_error("n_devices must be >= 2");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("x must be in [0,1]");
    if (x == 1.0) return 1.0;
    return -std::expm1((n_devices - 1.0) * std::log1p(-x));
}

double prob_n_collide(std::uint32_t n, double x, std::uint32_t n_devices) {
    if (n_devices < 2) throw std::domain_error("n_devices must be >= 2");
    if (n < 1 || n > n_devices - 1)
        throw std::domain_error("n must be in [1, N-1]");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("x must be in [0,1]");
    const std::uint32_t rest = n_devices - 1 - n;
    if (x == 0.0) return 0.0;
    if (x == 1.0) return rest == 0 ? 1.0 : 0.0;
    return std::exp(log_choose(n_devices - 1, n) + n * std::log(x) +
                    rest * std::log1p(-x));
}

double prob_backoff_collision(std::uint32_t n, double x,
                              std::uint32_t n_devices, std::uint32_t m) {
    if (m < 1) throw std::domain_error("m must be >= 1");
    // 1 - (1-1/m)^n, stable for large m
    const double same_backoff =
        m == 1 ? 1.0 : -std::expm1(n * std::log1p(-1.0 / m));
    return prob_n_collide(n, x, n_devices) * same_backoff;
}

double p_ca_exact(double p_c, std::uint32_t n_devices, std::uint32_t m) {
    check_pc_domain(p_c, n_devices);
    if (m < 1) throw std::domain_error("m must be >= 1");
    const double x = x_from_pc(p_c, n_devices);
    double sum = 0.0;
    for (std::uint32_t n = 1; n <= n_devices - 1; ++n)
        sum += prob_backoff_collision(n, x, n_devices, m);
    return clamp01(sum / p_c);
}

double p_ca_closed(double p_c, std::uint32_t n_devices, std::uint32_t m) {
    check_pc_domain(p_c, n_devices);
    if (m < 1) throw std::domain_error("m must be >= 1");
    const double x = x_from_pc(p_c, n_devices);
    const double bracket = 1.0 + x * (1.0 - 1.0 / m);
    const double inv_pc = 1.0 / p_c;
    return clamp01(inv_pc -
                   (inv_pc - 1.0) *
                       std::pow(bracket, n_devices - 1.0));
}

double p_c1_approx(double p_c, std::uint32_t n_devices, std::uint32_t m) {
    const double p_ca = p_ca_closed(p_c, n_devices, m);
    return clamp01(p_ca + (1.0 - p_ca) * p_c);
}

}  // namespace lpwan
