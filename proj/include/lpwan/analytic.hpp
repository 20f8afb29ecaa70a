#ifndef LPWAN_ANALYTIC_HPP_
#define LPWAN_ANALYTIC_HPP_

#include <cstdint>

namespace lpwan {

// Closed-form and exact-sum collision probabilities for the first and second
// transmission slots of a slotted-ALOHA network of N statistically identical
// devices with back-off window m. All functions are pure; probabilities are
// clamped to [0,1] where noted. Domain violations throw std::domain_error.

/// Steady-state per-slot transmission probability x of one device from the
/// first-transmission collision probability p_c: x = 1 - (1-p_c)^(1/(N-1)).
double x_from_pc(double p_c, std::uint32_t n_devices);

/// Inverse of x_from_pc: p_c = 1 - (1-x)^(N-1).
double pc_from_x(double x, std::uint32_t n_devices);

/// Probability that exactly n of the other N-1 devices transmit in the slot:
/// C(N-1,n) x^n (1-x)^(N-1-n), evaluated in log-space.
double prob_n_collide(std::uint32_t n, double x, std::uint32_t n_devices);

/// prob_n_collide(n) times the probability that at least one of the n
/// colliders draws the same back-off delay: 1 - (1 - 1/m)^n.
double prob_backoff_collision(std::uint32_t n, double x,
                              std::uint32_t n_devices, std::uint32_t m);

/// Conditional probability of re-colliding with a device from the previous
/// collision, exact sum over n = 1..N-1, clamped to [0,1].
double p_ca_exact(double p_c, std::uint32_t n_devices, std::uint32_t m);

/// Closed-form approximation of p_ca:
/// 1/p_c - (1/p_c - 1) [1 + (1-(1-p_c)^(1/(N-1)))(1 - 1/m)]^(N-1),
/// clamped to [0,1].
double p_ca_closed(double p_c, std::uint32_t n_devices, std::uint32_t m);

/// Approximate collision probability at the first retransmission:
/// p_ca + (1 - p_ca) p_c with p_ca = p_ca_closed.
double p_c1_approx(double p_c, std::uint32_t n_devices, std::uint32_t m);

}  // namespace lpwan

#endif  // LPWAN_ANALYTIC_HPP_
