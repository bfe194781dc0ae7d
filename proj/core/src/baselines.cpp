#include "bamdp/baselines.hpp"

#include <cmath>
#include <string>

#include "bamdp/error.hpp"
#include "bamdp/mdp_solver.hpp"

namespace bamdp {

ActionIndex ucb1_select(const Ucb1State& state) {
    if (state.n_arms() == 0) {
        throw IndexError("UCB1 needs at least one arm");
    }
    for (ActionIndex a = 0; a < state.n_arms(); ++a) {
        if (state.pull_count[a] == 0) {
            return a;
        }
    }
    const double log_t = std::log(static_cast<double>(state.t));
    ActionIndex best = 0;
    double best_index = -1.0;
    for (ActionIndex a = 0; a < state.n_arms(); ++a) {
        const auto n = static_cast<double>(state.pull_count[a]);
        const double index = state.reward_sum[a] / n + std::sqrt(2.0 * log_t / n);
        if (index > best_index) {
            best_index = index;
            best = a;
        }
    }
    return best;
}

Ucb1State ucb1_update(Ucb1State state, ActionIndex arm, Reward r) {
    if (arm >= state.n_arms()) {
        throw IndexError("arm " + std::to_string(arm) + " out of range");
    }
    if (r != 0 && r != 1) {
        throw IndexError("reward outcome must be 0 or 1");
    }
    ++state.pull_count[arm];
    state.reward_sum[arm] += r;
    ++state.t;
    return state;
}

ActionIndex bayes_greedy(const Belief& belief, StateIndex s, double gamma) {
    if (s >= belief.n_states()) {
        throw IndexError("state " + std::to_string(s) + " out of range");
    }
    const Mdp mean = mean_mdp(belief);
    const Solution solution = value_iteration(mean, gamma);
    const std::vector<double> q = q_values(mean, solution.values, gamma, s);
    ActionIndex best = 0;
    for (ActionIndex a = 1; a < q.size(); ++a) {
        if (q[a] > q[best]) {
            best = a;
        }
    }
    return best;
}

} // namespace bamdp
