#ifndef LPWAN_UCB_HPP_
#define LPWAN_UCB_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "lpwan/rng.hpp"

namespace lpwan {

/// UCB1 learner over K arms with exploration coefficient alpha.
/// mean_rewards[k] is the exact empirical mean of the rewards seen on k.
struct UcbLearner {
    std::vector<std::uint64_t> pulls;
    std::vector<double> mean_rewards;
    std::uint64_t attempts = 0;
    double alpha = 0.5;

    UcbLearner() = default;
    UcbLearner(std::uint32_t n_arms, double alpha_)
        : pulls(n_arms, 0), mean_rewards(n_arms, 0.0), alpha(alpha_) {}

    std::uint32_t n_arms() const {
        return static_cast<std::uint32_t>(pulls.size());
    }
};

/// Index of each arm at time `now`: +inf for unplayed arms, otherwise
/// mean + sqrt(alpha * ln(now) / pulls), with ln clamped at 0.
inline std::vector<double> learner_indices(const UcbLearner& l,
                                           std::uint64_t now) {
    const double log_now =
        std::max(0.0, std::log(static_cast<double>(now)));
    std::vector<double> idx(l.pulls.size());
    for (std::size_t k = 0; k < l.pulls.size(); ++k) {
        if (l.pulls[k] == 0) {
            idx[k] = std::numeric_limits<double>::infinity();
        } else {
            idx[k] = l.mean_rewards[k] +
                     std::sqrt(l.alpha * log_now /
                               static_cast<double>(l.pulls[k]));
        }
    }
    return idx;
}

/// Argmax of learner_indices at now = attempts + 1; ties broken uniformly
/// at random (reservoir over the maximal set).
inline std::uint32_t learner_select(const UcbLearner& l, std::mt19937_64& rng) {
    const std::vector<double> idx = learner_indices(l, l.attempts + 1);
    std::uint32_t best = 0;
    double best_value = idx[0];
    std::uint32_t ties = 1;
    for (std::uint32_t k = 1; k < idx.size(); ++k) {
        if (idx[k] > best_value) {
            best = k;
            best_value = idx[k];
            ties = 1;
        } else if (idx[k] == best_value) {
            ++ties;
            if (uniform_below(rng, ties) == 0) best = k;
        }
    }
    return best;
}

/// Record one reward on `channel`; keeps mean_rewards the exact running mean.
inline void learner_update(UcbLearner& l, std::uint32_t channel,
                           double reward) {
    ++l.pulls[channel];
    l.mean_rewards[channel] +=
        (reward - l.mean_rewards[channel]) /
        static_cast<double>(l.pulls[channel]);
    ++l.attempts;
}

}  // namespace lpwan

#endif  // LPWAN_UCB_HPP_
