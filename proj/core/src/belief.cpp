#include "bamdp/belief.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bamdp/error.hpp"

namespace bamdp {

namespace {

void check_index(std::size_t index, std::size_t bound, const char* what) {
    if (index >= bound) {
        throw IndexError(std::string(what) + " index " + std::to_string(index) +
                         " out of range [0, " + std::to_string(bound) + ")");
    }
}

void check_reward(Reward r) {
    if (r != 0 && r != 1) {
        throw IndexError("reward outcome must be 0 or 1, got " + std::to_string(r));
    }
}

void check_nonnegative(const std::vector<double>& values, const char* what) {
    for (double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw DegenerateBeliefError(std::string(what) + " parameters must be finite and >= 0");
        }
    }
}

double sample_gamma(double shape, Rng& rng) {
    std::gamma_distribution<double> gamma(shape, 1.0);
    return gamma(rng);
}

// Beta(alpha, beta) as X / (X + Y) with X ~ Gamma(alpha), Y ~ Gamma(beta).
double sample_beta(double alpha, double beta, Rng& rng) {
    const double x = sample_gamma(alpha, rng);
    const double y = sample_gamma(beta, rng);
    if (x + y <= 0.0) {
        // Both draws underflowed; only possible for tiny shapes. Fall back to the mean.
        return alpha / (alpha + beta);
    }
    return x / (x + y);
}

} // namespace

Mdp::Mdp(std::size_t n_states, std::size_t n_actions,
         std::vector<double> transition, std::vector<double> reward_mean)
    : n_states_(n_states),
      n_actions_(n_actions),
      transition_(std::move(transition)),
      reward_mean_(std::move(reward_mean)) {
    if (n_states_ == 0 || n_actions_ == 0) {
        throw InvalidMdpError("MDP needs at least one state and one action");
    }
    if (transition_.size() != n_states_ * n_actions_ * n_states_ ||
        reward_mean_.size() != n_states_ * n_actions_) {
        throw InvalidMdpError("MDP parameter arrays have the wrong size");
    }
    for (StateIndex s = 0; s < n_states_; ++s) {
        for (ActionIndex a = 0; a < n_actions_; ++a) {
            double total = 0.0;
            for (double p : transition_row(s, a)) {
                if (!(p >= 0.0)) {
                    throw InvalidMdpError("negative transition probability");
                }
                total += p;
            }
            if (std::abs(total - 1.0) > kStochasticTolerance) {
                throw InvalidMdpError("transition row (" + std::to_string(s) + ", " +
                                      std::to_string(a) + ") sums to " + std::to_string(total));
            }
            const double r = this->reward_mean(s, a);
            if (!(r >= 0.0 && r <= 1.0)) {
                throw InvalidMdpError("reward mean outside [0, 1]");
            }
        }
    }
}

Mdp Mdp::bandit(std::span<const double> arm_means) {
    return Mdp(1, arm_means.size(), std::vector<double>(arm_means.size(), 1.0),
               std::vector<double>(arm_means.begin(), arm_means.end()));
}

DirichletTransitionBelief::DirichletTransitionBelief(std::size_t n_states, std::size_t n_actions,
                                                     double prior_count)
    : DirichletTransitionBelief(n_states, n_actions,
                                std::vector<double>(n_states * n_actions * n_states, prior_count)) {}

DirichletTransitionBelief::DirichletTransitionBelief(std::size_t n_states, std::size_t n_actions,
                                                     std::vector<double> counts)
    : n_states_(n_states), n_actions_(n_actions), counts_(std::move(counts)) {
    if (n_states_ == 0 || n_actions_ == 0) {
        throw DegenerateBeliefError("belief needs at least one state and one action");
    }
    if (counts_.size() != n_states_ * n_actions_ * n_states_) {
        throw DegenerateBeliefError("transition count tensor has the wrong size");
    }
    check_nonnegative(counts_, "Dirichlet");
}

double DirichletTransitionBelief::row_total(StateIndex s, ActionIndex a) const {
    const auto r = row(s, a);
    return std::accumulate(r.begin(), r.end(), 0.0);
}

BetaRewardBelief::BetaRewardBelief(std::size_t n_states, std::size_t n_actions,
                                   double alpha0, double beta0)
    : BetaRewardBelief(n_states, n_actions, std::vector<double>(n_states * n_actions, alpha0),
                       std::vector<double>(n_states * n_actions, beta0)) {}

BetaRewardBelief::BetaRewardBelief(std::size_t n_states, std::size_t n_actions,
                                   std::vector<double> alpha, std::vector<double> beta)
    : n_actions_(n_actions), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.size() != n_states * n_actions || beta_.size() != n_states * n_actions) {
        throw DegenerateBeliefError("Beta parameter arrays have the wrong size");
    }
    check_nonnegative(alpha_, "Beta");
    check_nonnegative(beta_, "Beta");
}

Belief::Belief(DirichletTransitionBelief transitions, BetaRewardBelief rewards)
    : transitions_(std::move(transitions)), rewards_(std::move(rewards)) {
    if (rewards_.alphas().size() != transitions_.n_states() * transitions_.n_actions()) {
        throw DegenerateBeliefError("transition and reward beliefs disagree on shape");
    }
}

Belief Belief::from_prior(std::size_t n_states, std::size_t n_actions, const BeliefPrior& prior) {
    return Belief(DirichletTransitionBelief(n_states, n_actions, prior.transition_count),
                  BetaRewardBelief(n_states, n_actions, prior.reward_alpha, prior.reward_beta));
}

bool Belief::operator==(const Belief& other) const {
    return n_states() == other.n_states() && n_actions() == other.n_actions() &&
           transitions_.counts() == other.transitions_.counts() &&
           rewards_.alphas() == other.rewards_.alphas() &&
           rewards_.betas() == other.rewards_.betas();
}

Belief posterior_update(const Belief& belief, StateIndex s, ActionIndex a,
                        StateIndex next, Reward r) {
    check_index(s, belief.n_states(), "state");
    check_index(a, belief.n_actions(), "action");
    check_index(next, belief.n_states(), "next state");
    check_reward(r);
    Belief updated = belief;
    updated.transitions_.increment(s, a, next);
    updated.rewards_.observe(s, a, r);
    return updated;
}

double predictive_reward_mean(const Belief& belief, StateIndex s, ActionIndex a) {
    check_index(s, belief.n_states(), "state");
    check_index(a, belief.n_actions(), "action");
    const double alpha = belief.rewards().alpha(s, a);
    const double total = alpha + belief.rewards().beta(s, a);
    if (!(total > 0.0)) {
        throw DegenerateBeliefError("Beta parameters sum to zero at (" + std::to_string(s) +
                                    ", " + std::to_string(a) + ")");
    }
    return alpha / total;
}

Mdp mean_mdp(const Belief& belief) {
    const std::size_t n_states = belief.n_states();
    const std::size_t n_actions = belief.n_actions();
    std::vector<double> transition(n_states * n_actions * n_states);
    std::vector<double> reward(n_states * n_actions);

    for (StateIndex s = 0; s < n_states; ++s) {
        for (ActionIndex a = 0; a < n_actions; ++a) {
            const auto counts = belief.transitions().row(s, a);
            const double total = belief.transitions().row_total(s, a);
            if (!(total > 0.0)) {
                throw DegenerateBeliefError("Dirichlet parameters sum to zero at (" +
                                            std::to_string(s) + ", " + std::to_string(a) + ")");
            }
            auto out = transition.begin() + static_cast<std::ptrdiff_t>((s * n_actions + a) * n_states);
            std::transform(counts.begin(), counts.end(), out,
                           [total](double c) { return c / total; });
            reward[s * n_actions + a] = predictive_reward_mean(belief, s, a);
        }
    }
    return Mdp(n_states, n_actions, std::move(transition), std::move(reward));
}

Mdp sample_mdp(const Belief& belief, Rng& rng) {
    const std::size_t n_states = belief.n_states();
    const std::size_t n_actions = belief.n_actions();
    std::vector<double> transition(n_states * n_actions * n_states);
    std::vector<double> reward(n_states * n_actions);

    for (StateIndex s = 0; s < n_states; ++s) {
        for (ActionIndex a = 0; a < n_actions; ++a) {
            const auto counts = belief.transitions().row(s, a);
            if (std::any_of(counts.begin(), counts.end(), [](double c) { return !(c > 0.0); })) {
                throw DegenerateBeliefError("cannot sample a Dirichlet with a zero parameter");
            }
            const double alpha = belief.rewards().alpha(s, a);
            const double beta = belief.rewards().beta(s, a);
            if (!(alpha > 0.0 && beta > 0.0)) {
                throw DegenerateBeliefError("cannot sample a Beta with a zero parameter");
            }

            double* row = transition.data() + (s * n_actions + a) * n_states;
            if (n_states == 1) {
                row[0] = 1.0;
            } else {
                double total = 0.0;
                for (StateIndex i = 0; i < n_states; ++i) {
                    row[i] = sample_gamma(counts[i], rng);
                    total += row[i];
                }
                if (total > 0.0) {
                    for (StateIndex i = 0; i < n_states; ++i) {
                        row[i] /= total;
                    }
                } else {
                    // Every Gamma draw underflowed: use the mean row instead.
                    const double count_total = belief.transitions().row_total(s, a);
                    for (StateIndex i = 0; i < n_states; ++i) {
                        row[i] = counts[i] / count_total;
                    }
                }
            }
            reward[s * n_actions + a] = sample_beta(alpha, beta, rng);
        }
    }
    return Mdp(n_states, n_actions, std::move(transition), std::move(reward));
}

double predictive_prob(const Belief& belief, StateIndex s, ActionIndex a,
                       StateIndex next, Reward r) {
    check_index(s, belief.n_states(), "state");
    check_index(a, belief.n_actions(), "action");
    check_index(next, belief.n_states(), "next state");
    check_reward(r);
    const double total = belief.transitions().row_total(s, a);
    if (!(total > 0.0)) {
        throw DegenerateBeliefError("Dirichlet parameters sum to zero at (" + std::to_string(s) +
                                    ", " + std::to_string(a) + ")");
    }
    const double p_next = belief.transitions().count(s, a, next) / total;
    const double p_success = predictive_reward_mean(belief, s, a);
    return p_next * (r == 1 ? p_success : 1.0 - p_success);
}

} // namespace bamdp
