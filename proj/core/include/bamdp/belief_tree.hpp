#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "bamdp/belief.hpp"

namespace bamdp {

/// Stable index of a node in its tree's arena. Handles are issued in creation order.
using NodeHandle = std::uint32_t;

/// The BAMDP state: the MDP state together with the current posterior.
struct HyperState {
    StateIndex state = 0;
    Belief belief = Belief::from_prior(1, 1);
};

struct Branch {
    NodeHandle child;
    double probability;
};

struct TreeNode {
    HyperState hyper;
    std::size_t depth = 0;
    std::optional<NodeHandle> parent;
    ActionIndex incoming_action = 0;
    Reward incoming_reward = 0;
    double incoming_probability = 1.0;

    /// children[a] lists the outcomes of action a; empty for leaves.
    std::vector<std::vector<Branch>> children;

    std::optional<double> lower_bound;
    std::vector<double> upper_samples;
    double upper_sample_sum = 0.0;

    bool is_leaf() const { return children.empty(); }
};

/**
 * Belief tree rooted at a hyper-state.
 *
 * Nodes live in an arena and are addressed by NodeHandle; the root is handle 0.
 * Every node is created after its parent, so reverse handle order is a valid
 * bottom-up traversal. The leaf set is kept in sync by expand_node.
 */
class BeliefTree {
public:
    BeliefTree(HyperState root, double gamma);

    static constexpr NodeHandle root() { return 0; }

    double gamma() const { return gamma_; }
    std::size_t size() const { return nodes_.size(); }
    std::size_t n_actions() const { return nodes_.front().hyper.belief.n_actions(); }

    const TreeNode& node(NodeHandle h) const { return nodes_.at(h); }
    TreeNode& node(NodeHandle h) { return nodes_.at(h); }

    std::span<const NodeHandle> leaves() const { return leaves_; }
    bool is_in_leaf_set(NodeHandle h) const;

private:
    friend std::vector<NodeHandle> expand_node(BeliefTree&, NodeHandle);

    double gamma_;
    std::vector<TreeNode> nodes_;
    std::vector<NodeHandle> leaves_;
    std::vector<std::size_t> leaf_position_;  // npos for internal nodes
};

/**
 * Enumerates every (action, next state, reward) outcome of a leaf with non-zero
 * predictive probability and attaches the resulting posterior as a child.
 * Returns the new leaves. Throws StructuralError if the node is not a leaf.
 */
std::vector<NodeHandle> expand_node(BeliefTree& tree, NodeHandle handle);

/// V* of the mean MDP at the node's state. Cached in node.lower_bound.
double leaf_lower_bound(TreeNode& node, double gamma, double tol = kSolverTolerance);

/// Draws one MDP from the node's belief and appends its optimal value to node.upper_samples.
double leaf_upper_bound_sample(TreeNode& node, double gamma, double tol, Rng& rng);

/// Average of the retained upper-bound samples. Throws NoSamplesError when there are none.
double leaf_upper_bound_mean(const TreeNode& node);

/// Upper value used in backups: max(sample mean, lower bound), or the lower bound without samples.
double leaf_upper_value(const TreeNode& node);

/// Half-width eps with 2 exp(-2 c eps^2 (1 - gamma)^2) = delta.
double hoeffding_epsilon(std::size_t sample_count, double delta, double gamma);

/// Per-handle leaf values; entries for internal nodes are ignored.
using LeafValues = std::vector<std::optional<double>>;

struct InductionResult {
    ActionIndex best_action = 0;
    std::vector<double> root_q;
    /// V(node) for every handle after the backup.
    std::vector<double> node_value;
};

/**
 * Bottom-up Bellman backup over the tree:
 * Q(w, a) = sum_children p * (entry reward + gamma * V(child)), V = max_a Q,
 * V(leaf) = supplied value. Ties at the root go to the lowest action.
 * An unexpanded root reports its leaf value for every action.
 */
InductionResult backwards_induction(const BeliefTree& tree, const LeafValues& leaf_values);

struct BoundsBackup {
    std::vector<double> lower_q;
    std::vector<double> upper_q;
    /// Action whose lower bound dominates every other action's upper bound, if any.
    std::optional<ActionIndex> unambiguous_action;
};

/// Runs backwards_induction on leaf lower bounds and on leaf upper values.
BoundsBackup backup_bounds(const BeliefTree& tree);

/// Computes the lower bound of every leaf that does not have one yet.
void compute_leaf_lower_bounds(BeliefTree& tree, double tol = kSolverTolerance);

/// One line per node: handle parent action reward probability depth lower samples mean.
void dump_tree(const BeliefTree& tree, std::ostream& out);

} // namespace bamdp
