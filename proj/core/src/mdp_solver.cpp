#include "bamdp/mdp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bamdp/error.hpp"

namespace bamdp {

namespace {

void check_parameters(double gamma, double tol) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw InvalidDiscountError("discount must lie in [0, 1), got " + std::to_string(gamma));
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("solver tolerance must be positive");
    }
}

double sup_norm_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff = std::max(diff, std::abs(a[i] - b[i]));
    }
    return diff;
}

// Sweep-to-sweep change that guarantees the tol-accuracy of the result.
double stopping_threshold(double gamma, double tol) {
    if (gamma == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return tol * (1.0 - gamma) / (2.0 * gamma);
}

} // namespace

double q_value(const Mdp& mdp, const ValueFunction& v, double gamma, StateIndex s, ActionIndex a) {
    const auto row = mdp.transition_row(s, a);
    double expected = 0.0;
    for (StateIndex next = 0; next < row.size(); ++next) {
        expected += row[next] * v.value[next];
    }
    return mdp.reward_mean(s, a) + gamma * expected;
}

std::vector<double> q_values(const Mdp& mdp, const ValueFunction& v, double gamma, StateIndex s) {
    std::vector<double> q(mdp.n_actions());
    for (ActionIndex a = 0; a < mdp.n_actions(); ++a) {
        q[a] = q_value(mdp, v, gamma, s, a);
    }
    return q;
}

ValueFunction bellman_sweep(const Mdp& mdp, const ValueFunction& v, double gamma) {
    ValueFunction next{std::vector<double>(mdp.n_states())};
    for (StateIndex s = 0; s < mdp.n_states(); ++s) {
        double best = -std::numeric_limits<double>::infinity();
        for (ActionIndex a = 0; a < mdp.n_actions(); ++a) {
            best = std::max(best, q_value(mdp, v, gamma, s, a));
        }
        next.value[s] = best;
    }
    return next;
}

Policy greedy_policy(const Mdp& mdp, const ValueFunction& v, double gamma) {
    Policy policy{std::vector<ActionIndex>(mdp.n_states(), 0)};
    for (StateIndex s = 0; s < mdp.n_states(); ++s) {
        double best = -std::numeric_limits<double>::infinity();
        for (ActionIndex a = 0; a < mdp.n_actions(); ++a) {
            const double q = q_value(mdp, v, gamma, s, a);
            if (q > best) {
                best = q;
                policy.action[s] = a;
            }
        }
    }
    return policy;
}

Solution value_iteration(const Mdp& mdp, double gamma, double tol) {
    check_parameters(gamma, tol);

    if (mdp.n_states() == 1) {
        ActionIndex best = 0;
        for (ActionIndex a = 1; a < mdp.n_actions(); ++a) {
            if (mdp.reward_mean(0, a) > mdp.reward_mean(0, best)) {
                best = a;
            }
        }
        return {ValueFunction{{mdp.reward_mean(0, best) / (1.0 - gamma)}},
                Policy{{best}}};
    }

    const double threshold = stopping_threshold(gamma, tol);
    ValueFunction v{std::vector<double>(mdp.n_states(), 0.0)};
    for (;;) {
        ValueFunction next = bellman_sweep(mdp, v, gamma);
        const double change = sup_norm_diff(next.value, v.value);
        v = std::move(next);
        if (change < threshold) {
            break;
        }
    }
    Policy policy = greedy_policy(mdp, v, gamma);
    return {std::move(v), std::move(policy)};
}

ValueFunction policy_evaluation(const Mdp& mdp, const Policy& policy, double gamma, double tol) {
    check_parameters(gamma, tol);
    if (policy.action.size() != mdp.n_states()) {
        throw IndexError("policy covers " + std::to_string(policy.action.size()) +
                         " states, MDP has " + std::to_string(mdp.n_states()));
    }
    for (ActionIndex a : policy.action) {
        if (a >= mdp.n_actions()) {
            throw IndexError("policy action " + std::to_string(a) + " out of range");
        }
    }

    if (mdp.n_states() == 1) {
        return ValueFunction{{mdp.reward_mean(0, policy.action[0]) / (1.0 - gamma)}};
    }

    const double threshold = stopping_threshold(gamma, tol);
    ValueFunction v{std::vector<double>(mdp.n_states(), 0.0)};
    for (;;) {
        ValueFunction next{std::vector<double>(mdp.n_states())};
        for (StateIndex s = 0; s < mdp.n_states(); ++s) {
            next.value[s] = q_value(mdp, v, gamma, s, policy.action[s]);
        }
        const double change = sup_norm_diff(next.value, v.value);
        v = std::move(next);
        if (change < threshold) {
            break;
        }
    }
    return v;
}

} // namespace bamdp
