#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ivsf/surface_data.hpp"

namespace ivsf {

enum class SplitVar { kMoneyness, kMaturity };

struct TreeNode {
    // internal nodes
    SplitVar split_var = SplitVar::kMoneyness;
    double split_point = 0.0;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;
    // all nodes
    double prediction = 0.0;  // mean of training responses routed here
    int n_obs = 0;
    double node_sse = 0.0;  // SSE of this node treated as a leaf

    bool is_leaf() const { return !left; }
};

using TreePtr = std::unique_ptr<TreeNode>;

struct TreeParams {
    int max_leaves = 10;
    int min_leaf = 5;
};

// Greedy best-first growth: at each step the (leaf, split) pair with the
// largest SSE reduction is expanded; stops at max_leaves or when no split
// reduces SSE by > 0.
TreePtr grow_tree(const std::vector<IVQuote>& quotes, int max_leaves = 10, int min_leaf = 5);

TreePtr clone_tree(const TreeNode& node);
int leaf_count(const TreeNode& node);
double tree_sse(const TreeNode& node);

double predict_tree(const TreeNode& tree, double moneyness, double maturity);

// Weakest-link cost-complexity pruning sequence. alphas[0] = 0 holds the full
// tree; each later entry records the critical alpha at which the next
// collapse becomes optimal. alphas are strictly increasing and subtrees are
// nested with weakly decreasing leaf counts, ending at the root stump.
struct PruneSchedule {
    std::vector<double> alphas;
    std::vector<TreePtr> subtrees;
    // filled by cross-validation (select_complexity); empty otherwise
    std::vector<double> cv_alphas;  // representative alpha per interval
    std::vector<double> cv_errors;  // mean held-out MSE per cv_alpha
    std::vector<double> cv_std_errors;
};

PruneSchedule prune_path(const TreeNode& tree);

// Subtree optimal for complexity parameter alpha: the entry with the largest
// critical alpha <= alpha.
const TreeNode& subtree_for_alpha(const PruneSchedule& schedule, double alpha);

// Prunes a freshly grown tree at a fixed alpha.
TreePtr prune_at(const TreeNode& tree, double alpha);

struct ComplexitySelection {
    double alpha_star = 0.0;
    std::vector<double> cv_alphas;
    std::vector<double> cv_errors;
    std::vector<double> cv_std_errors;
};

// k-fold cross-validation over the pooled in-sample quotes; returns the
// representative alpha with minimum mean CV error. Deterministic given seed.
ComplexitySelection select_complexity_detail(const PanelSeries& panels, int folds,
                                             std::uint64_t seed, const TreeParams& params = {});
double select_complexity(const PanelSeries& panels, int folds, std::uint64_t seed,
                         const TreeParams& params = {});

std::string tree_to_json(const TreeNode& tree);
TreePtr tree_from_json(const std::string& json_text);

}  // namespace ivsf
