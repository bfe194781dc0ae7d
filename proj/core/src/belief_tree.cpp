#include "bamdp/belief_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bamdp/error.hpp"
#include "bamdp/mdp_solver.hpp"

namespace bamdp {

namespace {

constexpr std::size_t kNotALeaf = std::numeric_limits<std::size_t>::max();

} // namespace

BeliefTree::BeliefTree(HyperState root, double gamma) : gamma_(gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw InvalidDiscountError("discount must lie in [0, 1), got " + std::to_string(gamma));
    }
    if (root.state >= root.belief.n_states()) {
        throw IndexError("root state " + std::to_string(root.state) + " out of range");
    }
    nodes_.emplace_back().hyper = std::move(root);
    leaves_.push_back(0);
    leaf_position_.push_back(0);
}

bool BeliefTree::is_in_leaf_set(NodeHandle h) const {
    return h < leaf_position_.size() && leaf_position_[h] != kNotALeaf;
}

std::vector<NodeHandle> expand_node(BeliefTree& tree, NodeHandle handle) {
    if (handle >= tree.nodes_.size()) {
        throw IndexError("node handle " + std::to_string(handle) + " out of range");
    }
    if (!tree.nodes_[handle].is_leaf()) {
        throw StructuralError("node " + std::to_string(handle) + " is already expanded");
    }

    // Children are appended to the arena, so copy what we need from the parent first.
    const HyperState parent = tree.nodes_[handle].hyper;
    const std::size_t depth = tree.nodes_[handle].depth;
    const std::size_t n_states = parent.belief.n_states();
    const std::size_t n_actions = parent.belief.n_actions();

    std::vector<std::vector<Branch>> children(n_actions);
    std::vector<NodeHandle> created;
    for (ActionIndex a = 0; a < n_actions; ++a) {
        for (StateIndex next = 0; next < n_states; ++next) {
            for (Reward r : {0, 1}) {
                const double p = predictive_prob(parent.belief, parent.state, a, next, r);
                if (!(p > 0.0)) {
                    continue;
                }
                const auto child = static_cast<NodeHandle>(tree.nodes_.size());
                TreeNode& node = tree.nodes_.emplace_back();
                node.hyper = {next, posterior_update(parent.belief, parent.state, a, next, r)};
                node.depth = depth + 1;
                node.parent = handle;
                node.incoming_action = a;
                node.incoming_reward = r;
                node.incoming_probability = p;
                tree.leaf_position_.push_back(kNotALeaf);
                children[a].push_back({child, p});
                created.push_back(child);
            }
        }
    }
    tree.nodes_[handle].children = std::move(children);

    // Swap-remove the expanded node from the leaf set, then append its children.
    const std::size_t pos = tree.leaf_position_[handle];
    const NodeHandle moved = tree.leaves_.back();
    tree.leaves_[pos] = moved;
    tree.leaf_position_[moved] = pos;
    tree.leaves_.pop_back();
    tree.leaf_position_[handle] = kNotALeaf;
    for (NodeHandle child : created) {
        tree.leaf_position_[child] = tree.leaves_.size();
        tree.leaves_.push_back(child);
    }
    return created;
}

double leaf_lower_bound(TreeNode& node, double gamma, double tol) {
    const Mdp mean = mean_mdp(node.hyper.belief);
    const double value = value_iteration(mean, gamma, tol).values[node.hyper.state];
    node.lower_bound = value;
    return value;
}

double leaf_upper_bound_sample(TreeNode& node, double gamma, double tol, Rng& rng) {
    const Mdp sampled = sample_mdp(node.hyper.belief, rng);
    const double value = value_iteration(sampled, gamma, tol).values[node.hyper.state];
    node.upper_samples.push_back(value);
    node.upper_sample_sum += value;
    return value;
}

double leaf_upper_bound_mean(const TreeNode& node) {
    if (node.upper_samples.empty()) {
        throw NoSamplesError("node has no upper-bound samples");
    }
    return node.upper_sample_sum / static_cast<double>(node.upper_samples.size());
}

double leaf_upper_value(const TreeNode& node) {
    if (!node.lower_bound) {
        throw IncompleteValuationError("leaf has no lower bound");
    }
    if (node.upper_samples.empty()) {
        return *node.lower_bound;
    }
    return std::max(leaf_upper_bound_mean(node), *node.lower_bound);
}

double hoeffding_epsilon(std::size_t sample_count, double delta, double gamma) {
    if (sample_count < 1) {
        throw std::invalid_argument("Hoeffding bound needs at least one sample");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("failure probability must lie in (0, 1)");
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw InvalidDiscountError("discount must lie in [0, 1)");
    }
    const double range = 1.0 / (1.0 - gamma);
    return range * std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(sample_count)));
}

InductionResult backwards_induction(const BeliefTree& tree, const LeafValues& leaf_values) {
    const std::size_t n_nodes = tree.size();
    const std::size_t n_actions = tree.n_actions();
    const double gamma = tree.gamma();

    auto leaf_value = [&](NodeHandle h) {
        if (h >= leaf_values.size() || !leaf_values[h]) {
            throw IncompleteValuationError("leaf " + std::to_string(h) + " has no value");
        }
        return *leaf_values[h];
    };

    InductionResult result;
    result.node_value.assign(n_nodes, 0.0);
    std::vector<double> q(n_actions);

    for (std::size_t i = n_nodes; i-- > 0;) {
        const auto h = static_cast<NodeHandle>(i);
        const TreeNode& node = tree.node(h);
        if (node.is_leaf()) {
            result.node_value[h] = leaf_value(h);
            continue;
        }
        for (ActionIndex a = 0; a < n_actions; ++a) {
            double total = 0.0;
            for (const Branch& b : node.children[a]) {
                const TreeNode& child = tree.node(b.child);
                total += b.probability *
                         (static_cast<double>(child.incoming_reward) + gamma * result.node_value[b.child]);
            }
            q[a] = total;
        }
        ActionIndex best = 0;
        for (ActionIndex a = 1; a < n_actions; ++a) {
            if (q[a] > q[best]) {
                best = a;
            }
        }
        result.node_value[h] = q[best];
        if (h == BeliefTree::root()) {
            result.root_q = q;
            result.best_action = best;
        }
    }

    if (tree.node(BeliefTree::root()).is_leaf()) {
        result.root_q.assign(n_actions, result.node_value[BeliefTree::root()]);
        result.best_action = 0;
    }
    return result;
}

BoundsBackup backup_bounds(const BeliefTree& tree) {
    LeafValues lower(tree.size());
    LeafValues upper(tree.size());
    for (NodeHandle h : tree.leaves()) {
        const TreeNode& leaf = tree.node(h);
        if (!leaf.lower_bound) {
            throw IncompleteValuationError("leaf " + std::to_string(h) + " has no lower bound");
        }
        lower[h] = *leaf.lower_bound;
        upper[h] = leaf_upper_value(leaf);
    }

    BoundsBackup backup;
    backup.lower_q = backwards_induction(tree, lower).root_q;
    backup.upper_q = backwards_induction(tree, upper).root_q;

    const std::size_t n_actions = backup.lower_q.size();
    for (ActionIndex candidate = 0; candidate < n_actions && !backup.unambiguous_action; ++candidate) {
        bool dominates = true;
        for (ActionIndex a = 0; a < n_actions; ++a) {
            if (a != candidate && backup.lower_q[candidate] < backup.upper_q[a]) {
                dominates = false;
                break;
            }
        }
        if (dominates && n_actions > 1) {
            backup.unambiguous_action = candidate;
        }
    }
    return backup;
}

void compute_leaf_lower_bounds(BeliefTree& tree, double tol) {
    for (NodeHandle h : tree.leaves()) {
        TreeNode& leaf = tree.node(h);
        if (!leaf.lower_bound) {
            leaf_lower_bound(leaf, tree.gamma(), tol);
        }
    }
}

void dump_tree(const BeliefTree& tree, std::ostream& out) {
    out << "# handle parent action reward probability depth lower_bound samples sample_mean\n";
    for (NodeHandle h = 0; h < tree.size(); ++h) {
        const TreeNode& node = tree.node(h);
        out << h << ' ';
        if (node.parent) {
            out << *node.parent << ' ' << node.incoming_action << ' ' << node.incoming_reward;
        } else {
            out << "- - -";
        }
        out << ' ' << node.incoming_probability << ' ' << node.depth << ' ';
        if (node.lower_bound) {
            out << *node.lower_bound;
        } else {
            out << '-';
        }
        out << ' ' << node.upper_samples.size() << ' ';
        if (node.upper_samples.empty()) {
            out << '-';
        } else {
            out << leaf_upper_bound_mean(node);
        }
        out << '\n';
    }
}

} // namespace bamdp
