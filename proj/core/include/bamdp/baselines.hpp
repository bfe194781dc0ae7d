#pragma once

#include <vector>

#include "bamdp/belief.hpp"

namespace bamdp {

/// Sufficient statistics of UCB1 over Bernoulli arms.
struct Ucb1State {
    std::vector<std::size_t> pull_count;
    std::vector<double> reward_sum;
    std::size_t t = 0;

    static Ucb1State with_arms(std::size_t n_arms) {
        return {std::vector<std::size_t>(n_arms, 0), std::vector<double>(n_arms, 0.0), 0};
    }
    std::size_t n_arms() const { return pull_count.size(); }
};

/// Lowest-index unpulled arm, else argmax of mean + sqrt(2 ln t / n); ties to the lowest index.
ActionIndex ucb1_select(const Ucb1State& state);

Ucb1State ucb1_update(Ucb1State state, ActionIndex arm, Reward r);

/// Greedy action in the posterior-mean MDP: argmax_a Q*(s, a), ties to the lowest index.
ActionIndex bayes_greedy(const Belief& belief, StateIndex s, double gamma);

} // namespace bamdp
