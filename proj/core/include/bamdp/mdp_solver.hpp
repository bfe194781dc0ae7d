#pragma once

#include <vector>

#include "bamdp/belief.hpp"

namespace bamdp {

/// Deterministic stationary policy: one action per state.
struct Policy {
    std::vector<ActionIndex> action;
};

struct ValueFunction {
    std::vector<double> value;

    double operator[](StateIndex s) const { return value[s]; }
};

struct Solution {
    ValueFunction values;
    Policy policy;
};

/// Q(s,a) = r(s,a) + gamma * sum_s' P(s'|s,a) V(s').
double q_value(const Mdp& mdp, const ValueFunction& v, double gamma, StateIndex s, ActionIndex a);

/// All action values at state s.
std::vector<double> q_values(const Mdp& mdp, const ValueFunction& v, double gamma, StateIndex s);

/// One optimal Bellman sweep (V' = max_a Q). Exposed so callers can observe contraction.
ValueFunction bellman_sweep(const Mdp& mdp, const ValueFunction& v, double gamma);

/// Policy greedy with respect to v; ties go to the lowest action index.
Policy greedy_policy(const Mdp& mdp, const ValueFunction& v, double gamma);

/**
 * Discounted value iteration from V = 0.
 *
 * Sweeps until the sup-norm change drops below tol * (1 - gamma) / (2 * gamma),
 * which puts the result within tol of V*. Single-state models are solved in
 * closed form (max_a r / (1 - gamma)), the exact fixed point of the same sweep.
 *
 * Throws InvalidDiscountError unless 0 <= gamma < 1, std::invalid_argument if tol <= 0.
 */
Solution value_iteration(const Mdp& mdp, double gamma, double tol = kSolverTolerance);

/// Value of a fixed policy, same stopping rule as value_iteration.
ValueFunction policy_evaluation(const Mdp& mdp, const Policy& policy, double gamma,
                                double tol = kSolverTolerance);

} // namespace bamdp
