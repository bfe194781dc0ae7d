#include <gtest/gtest.h>

#include <random>

#include "bamdp/belief.hpp"
#include "bamdp/error.hpp"
#include "oracles.hpp"

namespace bamdp {
namespace {

Belief bandit_belief(std::vector<double> alpha, std::vector<double> beta) {
    const std::size_t arms = alpha.size();
    return Belief(DirichletTransitionBelief(1, arms, 1.0),
                  BetaRewardBelief(1, arms, std::move(alpha), std::move(beta)));
}

TEST(PosteriorUpdate, IncrementsTransitionCount) {
    Belief prior(DirichletTransitionBelief(2, 1, {2.0, 3.0, 1.0, 1.0}), BetaRewardBelief(2, 1, 1.0, 1.0));
    const Belief post = posterior_update(prior, 0, 0, 0, 1);
    EXPECT_EQ(post.transitions().count(0, 0, 0), 3.0);
    EXPECT_EQ(post.transitions().count(0, 0, 1), 3.0);
    EXPECT_EQ(post.transitions().count(1, 0, 0), 1.0);
    // value semantics
    EXPECT_EQ(prior.transitions().count(0, 0, 0), 2.0);
}

TEST(PosteriorUpdate, BetaConjugateUpdate) {
    const Belief prior = Belief::from_prior(1, 2);
    const Belief win = posterior_update(prior, 0, 0, 0, 1);
    EXPECT_EQ(win.rewards().alpha(0, 0), 2.0);
    EXPECT_EQ(win.rewards().beta(0, 0), 1.0);
    const Belief loss = posterior_update(prior, 0, 1, 0, 0);
    EXPECT_EQ(loss.rewards().alpha(0, 1), 1.0);
    EXPECT_EQ(loss.rewards().beta(0, 1), 2.0);
}

TEST(PosteriorUpdate, UpdatesOnDifferentPairsCommute) {
    const Belief prior = Belief::from_prior(3, 2);
    const Belief xy = posterior_update(posterior_update(prior, 0, 1, 2, 1), 2, 0, 1, 0);
    const Belief yx = posterior_update(posterior_update(prior, 2, 0, 1, 0), 0, 1, 2, 1);
    EXPECT_EQ(xy, yx);
}

TEST(PosteriorUpdate, RejectsOutOfRangeIndices) {
    const Belief prior = Belief::from_prior(2, 2);
    EXPECT_THROW(posterior_update(prior, 2, 0, 0, 0), IndexError);
    EXPECT_THROW(posterior_update(prior, 0, 2, 0, 0), IndexError);
    EXPECT_THROW(posterior_update(prior, 0, 0, 5, 0), IndexError);
    EXPECT_THROW(posterior_update(prior, 0, 0, 0, 2), IndexError);
}

TEST(MeanMdp, ClosedForms) {
    Belief belief(DirichletTransitionBelief(3, 1, {3, 1, 0, 1, 1, 1, 0, 0, 2}),
                  BetaRewardBelief(3, 1, {2, 1, 1}, {1, 1, 3}));
    const Mdp mean = mean_mdp(belief);
    EXPECT_DOUBLE_EQ(mean.transition(0, 0, 0), 0.75);
    EXPECT_DOUBLE_EQ(mean.transition(0, 0, 1), 0.25);
    EXPECT_DOUBLE_EQ(mean.transition(0, 0, 2), 0.0);
    EXPECT_DOUBLE_EQ(mean.transition(1, 0, 0), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(mean.reward_mean(0, 0), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(mean.reward_mean(1, 0), 0.5);
    EXPECT_DOUBLE_EQ(mean.reward_mean(2, 0), 0.25);
}

TEST(MeanMdp, SymmetricRow) {
    const Mdp mean = mean_mdp(Belief::from_prior(2, 1));
    EXPECT_DOUBLE_EQ(mean.transition(0, 0, 0), 0.5);
    EXPECT_DOUBLE_EQ(mean.transition(0, 0, 1), 0.5);
}

TEST(MeanMdp, DegenerateBelief) {
    Belief zero_counts(DirichletTransitionBelief(2, 1, {0, 0, 1, 1}), BetaRewardBelief(2, 1, 1, 1));
    EXPECT_THROW(mean_mdp(zero_counts), DegenerateBeliefError);
    EXPECT_THROW(mean_mdp(Belief::from_prior(1, 2, {1.0, 0.0, 0.0})), DegenerateBeliefError);
    // Beta(0, 1) is usable for the mean even though it is improper for sampling.
    EXPECT_DOUBLE_EQ(mean_mdp(Belief::from_prior(1, 2, {1.0, 0.0, 1.0})).reward_mean(0, 0), 0.0);
}

TEST(MeanMdp, OnlyUpdatedRowChanges) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Belief belief = testing::random_belief(3, 2, 1, 5, rng);
        const Belief post = posterior_update(belief, 1, 0, 2, 1);
        const Mdp before = mean_mdp(belief);
        const Mdp after = mean_mdp(post);
        for (StateIndex s = 0; s < 3; ++s) {
            for (ActionIndex a = 0; a < 2; ++a) {
                if (s == 1 && a == 0) continue;
                EXPECT_EQ(before.reward_mean(s, a), after.reward_mean(s, a));
                for (StateIndex n = 0; n < 3; ++n) {
                    EXPECT_EQ(before.transition(s, a, n), after.transition(s, a, n));
                }
            }
        }
    }
}

TEST(SampleMdp, ConcentratedDirichlet) {
    Belief belief(DirichletTransitionBelief(2, 1, {1e6, 1, 1, 1}), BetaRewardBelief(2, 1, 1, 1));
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        EXPECT_GT(sample_mdp(belief, rng).transition(0, 0, 0), 0.99);
    }
}

TEST(SampleMdp, EmpiricalMeanMatchesDirichletMean) {
    Belief belief(DirichletTransitionBelief(2, 1, {2, 2, 1, 1}), BetaRewardBelief(2, 1, 1, 1));
    Rng rng(2024);
    double total = 0.0;
    constexpr int kSamples = 10000;
    for (int i = 0; i < kSamples; ++i) {
        total += sample_mdp(belief, rng).transition(0, 0, 0);
    }
    EXPECT_NEAR(total / kSamples, 0.5, 0.02);
}

TEST(SampleMdp, BetaMeanAndDeterminism) {
    const Belief belief = bandit_belief({3, 1}, {1, 3});
    Rng a(99), b(99);
    const Mdp first = sample_mdp(belief, a);
    const Mdp second = sample_mdp(belief, b);
    EXPECT_EQ(first.transitions(), second.transitions());
    EXPECT_EQ(first.reward_means(), second.reward_means());

    Rng rng(5);
    double total = 0.0;
    for (int i = 0; i < 20000; ++i) total += sample_mdp(belief, rng).reward_mean(0, 0);
    // Beta(3,1): mean 0.75, sd ~0.19, so the MC error is ~0.0014.
    EXPECT_NEAR(total / 20000, 0.75, 0.01);
}

TEST(SampleMdp, OutputsAreValidMdps) {
    std::mt19937_64 gen(3);
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const Belief belief = testing::random_belief(3, 2, 1, 4, gen);
        // The Mdp constructor validates stochasticity and reward range.
        EXPECT_NO_THROW(sample_mdp(belief, rng));
    }
}

TEST(SampleMdp, ZeroParameterIsDegenerate) {
    Rng rng(1);
    Belief zero_psi(DirichletTransitionBelief(2, 1, {3, 0, 1, 1}), BetaRewardBelief(2, 1, 1, 1));
    EXPECT_THROW(sample_mdp(zero_psi, rng), DegenerateBeliefError);
    EXPECT_THROW(sample_mdp(bandit_belief({0, 1}, {1, 1}), rng), DegenerateBeliefError);
}

TEST(PredictiveProb, BanditExamples) {
    const Belief flat = Belief::from_prior(1, 2);
    EXPECT_DOUBLE_EQ(predictive_prob(flat, 0, 0, 0, 1), 0.5);
    EXPECT_DOUBLE_EQ(predictive_prob(flat, 0, 0, 0, 0), 0.5);
    const Belief skewed = bandit_belief({2, 1}, {1, 1});
    EXPECT_DOUBLE_EQ(predictive_prob(skewed, 0, 0, 0, 1), 2.0 / 3.0);
}

TEST(PredictiveProb, SumsToOneOverOutcomes) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t S = 1 + trial % 4;
        const std::size_t A = 1 + trial % 3;
        const Belief belief = testing::random_belief(S, A, 1, 9, rng);
        for (StateIndex s = 0; s < S; ++s) {
            for (ActionIndex a = 0; a < A; ++a) {
                double total = 0.0;
                for (StateIndex n = 0; n < S; ++n) {
                    total += predictive_prob(belief, s, a, n, 0) + predictive_prob(belief, s, a, n, 1);
                }
                EXPECT_NEAR(total, 1.0, 1e-9);
            }
        }
    }
}

TEST(Mdp, RejectsInvalidModels) {
    EXPECT_THROW(Mdp(1, 1, {0.5}, {0.5}), InvalidMdpError);
    EXPECT_THROW(Mdp(1, 1, {1.0}, {1.5}), InvalidMdpError);
    EXPECT_THROW(Mdp(2, 1, {1.2, -0.2, 0.5, 0.5}, {0.1, 0.1}), InvalidMdpError);
    EXPECT_THROW(Mdp(0, 1, {}, {}), InvalidMdpError);
}

} // namespace
} // namespace bamdp
