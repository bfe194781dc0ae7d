#include "bamdp/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bamdp/error.hpp"

namespace bamdp {

StrategyKind parse_strategy(std::string_view name) {
    if (name == "serial") return StrategyKind::Serial;
    if (name == "random") return StrategyKind::Random;
    if (name == "lower") return StrategyKind::HighestLowerBound;
    if (name == "thompson") return StrategyKind::ThompsonSampling;
    if (name == "upper") return StrategyKind::HighProbUpperBound;
    throw ConfigError("unknown expansion strategy '" + std::string(name) +
                      "' (expected serial, random, lower, thompson or upper)");
}

std::string_view strategy_name(StrategyKind kind) {
    switch (kind) {
    case StrategyKind::Serial: return "serial";
    case StrategyKind::Random: return "random";
    case StrategyKind::HighestLowerBound: return "lower";
    case StrategyKind::ThompsonSampling: return "thompson";
    case StrategyKind::HighProbUpperBound: return "upper";
    }
    return "unknown";
}

bool consumes_samples(StrategyKind kind) {
    return kind == StrategyKind::ThompsonSampling || kind == StrategyKind::HighProbUpperBound;
}

double node_utility(StrategyKind kind, TreeNode& node, NodeHandle creation_index, double gamma,
                    Rng& rng, double tol) {
    if (!node.is_leaf()) {
        throw StructuralError("utilities are only defined for leaves");
    }
    const double discount = std::pow(gamma, static_cast<double>(node.depth));
    switch (kind) {
    case StrategyKind::Serial:
        return -static_cast<double>(creation_index);
    case StrategyKind::Random:
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    case StrategyKind::HighestLowerBound:
        if (!node.lower_bound) {
            throw IncompleteNodeError("lower-bound utility needs a computed lower bound");
        }
        return discount * *node.lower_bound;
    case StrategyKind::ThompsonSampling:
        return discount * leaf_upper_bound_sample(node, gamma, tol, rng);
    case StrategyKind::HighProbUpperBound:
        if (!node.lower_bound || node.upper_samples.empty()) {
            throw IncompleteNodeError("upper-bound utility needs samples and a lower bound");
        }
        return discount * std::max(leaf_upper_bound_mean(node), *node.lower_bound);
    }
    throw ConfigError("unhandled expansion strategy");
}

ExpansionResult expand_tree(const HyperState& root, const ExpansionBudget& budget,
                            StrategyKind strategy, double gamma, Rng& rng,
                            BeliefTree* tree_out) {
    if (budget.n_expansions < 1 || budget.samples_per_iteration < 1) {
        throw ConfigError("expansion budget must be at least one");
    }

    BeliefTree tree(root, gamma);
    ExpansionDiagnostics diag;
    leaf_lower_bound(tree.node(BeliefTree::root()), gamma);

    for (std::size_t n = 1; n <= budget.n_expansions; ++n) {
        if (strategy == StrategyKind::HighProbUpperBound) {
            for (NodeHandle h : tree.leaves()) {
                for (std::size_t k = 0; k < budget.samples_per_iteration; ++k) {
                    leaf_upper_bound_sample(tree.node(h), gamma, kSolverTolerance, rng);
                }
                diag.samples_drawn += budget.samples_per_iteration;
            }
        }

        NodeHandle chosen = 0;
        double best = -std::numeric_limits<double>::infinity();
        bool have_choice = false;
        for (NodeHandle h : tree.leaves()) {
            const double u = node_utility(strategy, tree.node(h), h, gamma, rng);
            if (!have_choice || u > best || (u == best && h < chosen)) {
                best = u;
                chosen = h;
                have_choice = true;
            }
        }
        if (strategy == StrategyKind::ThompsonSampling) {
            diag.samples_drawn += tree.leaves().size();
        }

        for (NodeHandle child : expand_node(tree, chosen)) {
            TreeNode& node = tree.node(child);
            leaf_lower_bound(node, gamma);
            diag.max_depth = std::max(diag.max_depth, node.depth);
        }
        ++diag.expansions;
    }

    BoundsBackup bounds = backup_bounds(tree);
    ActionIndex action = 0;
    for (ActionIndex a = 1; a < bounds.lower_q.size(); ++a) {
        const double lo = bounds.lower_q[a];
        const double best_lo = bounds.lower_q[action];
        if (lo > best_lo || (lo == best_lo && bounds.upper_q[a] > bounds.upper_q[action])) {
            action = a;
        }
    }

    diag.tree_size = tree.size();
    diag.leaf_count = tree.leaves().size();
    diag.lower_q = std::move(bounds.lower_q);
    diag.upper_q = std::move(bounds.upper_q);
    diag.unambiguous_action = bounds.unambiguous_action;
    if (tree_out != nullptr) {
        *tree_out = std::move(tree);
    }
    return {action, std::move(diag)};
}

} // namespace bamdp
