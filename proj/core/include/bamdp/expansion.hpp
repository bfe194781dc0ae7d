#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bamdp/belief_tree.hpp"

namespace bamdp {

/// Rule for scoring which leaf to expand next.
enum class StrategyKind {
    Serial,              ///< oldest leaf first (U = -creation index)
    Random,              ///< uniform over leaves
    HighestLowerBound,   ///< gamma^depth * lower bound
    ThompsonSampling,    ///< gamma^depth * one fresh upper-bound sample
    HighProbUpperBound,  ///< gamma^depth * max(mean upper sample, lower bound)
};

/// Parses "serial" | "random" | "lower" | "thompson" | "upper". Throws ConfigError otherwise.
StrategyKind parse_strategy(std::string_view name);
std::string_view strategy_name(StrategyKind kind);

/// Whether the strategy reads upper-bound samples when scoring leaves.
bool consumes_samples(StrategyKind kind);

struct ExpansionBudget {
    std::size_t n_expansions = 1;
    /// Retained samples drawn per leaf per iteration by the mean-upper-bound strategy.
    std::size_t samples_per_iteration = 1;
};

/**
 * Expansion utility of a leaf. The creation index is the node's handle.
 * ThompsonSampling draws (and retains) one fresh sample; HighProbUpperBound
 * needs at least one retained sample and a lower bound; HighestLowerBound
 * needs a lower bound. Missing data raises IncompleteNodeError.
 */
double node_utility(StrategyKind kind, TreeNode& node, NodeHandle creation_index, double gamma,
                    Rng& rng, double tol = kSolverTolerance);

struct ExpansionDiagnostics {
    std::size_t expansions = 0;
    std::size_t tree_size = 0;
    std::size_t leaf_count = 0;
    std::size_t max_depth = 0;
    std::size_t samples_drawn = 0;
    std::vector<double> lower_q;
    std::vector<double> upper_q;
    std::optional<ActionIndex> unambiguous_action;
};

struct ExpansionResult {
    ActionIndex action = 0;
    ExpansionDiagnostics diagnostics;
};

/**
 * Anytime tree expansion from a hyper-state.
 *
 * Each of the N iterations refreshes upper-bound samples at every leaf (only
 * for strategies that read them), scores all leaves, and expands the best one
 * (ties to the oldest). Afterwards the leaf bounds are backed up and the root
 * action with the highest lower-bound Q is returned, ties going to the higher
 * upper-bound Q and then the lowest index.
 */
ExpansionResult expand_tree(const HyperState& root, const ExpansionBudget& budget,
                            StrategyKind strategy, double gamma, Rng& rng,
                            BeliefTree* tree_out = nullptr);

} // namespace bamdp
