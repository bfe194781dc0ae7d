#pragma once

#include <span>
#include <vector>

#include "bamdp/types.hpp"

namespace bamdp {

/**
 * A discrete MDP with Bernoulli rewards.
 *
 * Transitions are stored densely as P(s'|s,a) at index (s * A + a) * S + s',
 * reward means at index s * A + a. The constructor validates that every
 * row is a probability distribution and every reward mean lies in [0,1].
 */
class Mdp {
public:
    Mdp(std::size_t n_states, std::size_t n_actions,
        std::vector<double> transition, std::vector<double> reward_mean);

    /// A single-state MDP: a K-armed Bernoulli bandit.
    static Mdp bandit(std::span<const double> arm_means);

    std::size_t n_states() const { return n_states_; }
    std::size_t n_actions() const { return n_actions_; }

    double transition(StateIndex s, ActionIndex a, StateIndex next) const {
        return transition_[(s * n_actions_ + a) * n_states_ + next];
    }
    std::span<const double> transition_row(StateIndex s, ActionIndex a) const {
        return {transition_.data() + (s * n_actions_ + a) * n_states_, n_states_};
    }
    double reward_mean(StateIndex s, ActionIndex a) const {
        return reward_mean_[s * n_actions_ + a];
    }

    const std::vector<double>& transitions() const { return transition_; }
    const std::vector<double>& reward_means() const { return reward_mean_; }

private:
    std::size_t n_states_;
    std::size_t n_actions_;
    std::vector<double> transition_;
    std::vector<double> reward_mean_;
};

/// Independent Dirichlet parameters psi^{s,a} over next states, one vector per (s,a).
class DirichletTransitionBelief {
public:
    DirichletTransitionBelief(std::size_t n_states, std::size_t n_actions, double prior_count);
    DirichletTransitionBelief(std::size_t n_states, std::size_t n_actions,
                              std::vector<double> counts);

    std::size_t n_states() const { return n_states_; }
    std::size_t n_actions() const { return n_actions_; }

    double count(StateIndex s, ActionIndex a, StateIndex next) const {
        return counts_[(s * n_actions_ + a) * n_states_ + next];
    }
    std::span<const double> row(StateIndex s, ActionIndex a) const {
        return {counts_.data() + (s * n_actions_ + a) * n_states_, n_states_};
    }
    double row_total(StateIndex s, ActionIndex a) const;
    const std::vector<double>& counts() const { return counts_; }

    void increment(StateIndex s, ActionIndex a, StateIndex next) {
        counts_[(s * n_actions_ + a) * n_states_ + next] += 1.0;
    }

private:
    std::size_t n_states_;
    std::size_t n_actions_;
    std::vector<double> counts_;
};

/// Independent Beta(alpha, beta) parameters on the Bernoulli reward of each (s,a).
class BetaRewardBelief {
public:
    BetaRewardBelief(std::size_t n_states, std::size_t n_actions, double alpha0, double beta0);
    BetaRewardBelief(std::size_t n_states, std::size_t n_actions,
                     std::vector<double> alpha, std::vector<double> beta);

    double alpha(StateIndex s, ActionIndex a) const { return alpha_[s * n_actions_ + a]; }
    double beta(StateIndex s, ActionIndex a) const { return beta_[s * n_actions_ + a]; }
    const std::vector<double>& alphas() const { return alpha_; }
    const std::vector<double>& betas() const { return beta_; }

    void observe(StateIndex s, ActionIndex a, Reward r) {
        (r == 1 ? alpha_ : beta_)[s * n_actions_ + a] += 1.0;
    }

private:
    std::size_t n_actions_;
    std::vector<double> alpha_;
    std::vector<double> beta_;
};

struct BeliefPrior {
    double transition_count = 1.0;
    double reward_alpha = 1.0;
    double reward_beta = 1.0;
};

/// Product-form posterior over MDPs with a fixed, known state and action space.
class Belief {
public:
    Belief(DirichletTransitionBelief transitions, BetaRewardBelief rewards);

    static Belief from_prior(std::size_t n_states, std::size_t n_actions,
                             const BeliefPrior& prior = {});

    std::size_t n_states() const { return transitions_.n_states(); }
    std::size_t n_actions() const { return transitions_.n_actions(); }

    const DirichletTransitionBelief& transitions() const { return transitions_; }
    const BetaRewardBelief& rewards() const { return rewards_; }

    bool operator==(const Belief& other) const;

private:
    friend Belief posterior_update(const Belief&, StateIndex, ActionIndex, StateIndex, Reward);

    DirichletTransitionBelief transitions_;
    BetaRewardBelief rewards_;
};

/// Returns the belief after observing (s, a) -> (next, r). The input is left untouched.
Belief posterior_update(const Belief& belief, StateIndex s, ActionIndex a,
                        StateIndex next, Reward r);

/// Posterior-mean MDP: psi / sum(psi) transitions and alpha / (alpha + beta) rewards.
Mdp mean_mdp(const Belief& belief);

/// Draws one MDP from the posterior (Dirichlet rows via normalised Gammas, Beta via two Gammas).
Mdp sample_mdp(const Belief& belief, Rng& rng);

/// Marginal probability of observing (next, r) after taking a in s.
double predictive_prob(const Belief& belief, StateIndex s, ActionIndex a,
                       StateIndex next, Reward r);

/// Posterior mean of the Bernoulli reward at (s,a).
double predictive_reward_mean(const Belief& belief, StateIndex s, ActionIndex a);

} // namespace bamdp
