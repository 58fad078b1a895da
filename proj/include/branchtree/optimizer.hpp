#pragma once

#include <string>
#include <vector>

#include "branchtree/costs.hpp"
#include "branchtree/distribution.hpp"
#include "branchtree/tree.hpp"

namespace branchtree {

// Triangular interval tables: optimal subtree cost c(i,j), the argmin split
// point, and the argmin method id, all 1-based with i <= j.
class DPTable {
public:
    DPTable() = default;
    explicit DPTable(int n)
        : n_(n),
          cost_(static_cast<size_t>(n + 1) * static_cast<size_t>(n + 1), 0.0),
          split_(cost_.size(), 0),
          method_(cost_.size(), 0) {}

    int size() const { return n_; }

    double cost(int i, int j) const { return cost_[idx(i, j)]; }
    int split(int i, int j) const { return split_[idx(i, j)]; }
    int method(int i, int j) const { return method_[idx(i, j)]; }

    void set(int i, int j, double cost, int split, int method) {
        cost_[idx(i, j)] = cost;
        split_[idx(i, j)] = split;
        method_[idx(i, j)] = method;
    }

    // Total table entries, for space accounting.
    size_t entries() const { return cost_.size(); }

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(n_ + 1) +
               static_cast<size_t>(j);
    }

    int n_ = 0;
    std::vector<double> cost_;
    std::vector<int> split_;
    std::vector<int> method_;
};

struct OptimizeResult {
    DecisionTree tree;
    double expected_cost = 0.0;
    DPTable table;
    std::string model;
};

// Minimum expected run time with per-node choice of branch bias: each node
// assigns c0 to one edge and c1 to the other, whichever orientation is
// cheaper. Method 1 in the result means left edge costs c0, method 2 the
// reverse. O(n^3) time, O(n^2) space.
OptimizeResult optimize_static(const Distribution& dist, const StaticCosts& costs);

// Edge-order-restricted baseline: every left edge costs left_cost and every
// right edge right_cost. Upper-bounds optimize_static for the same cost pair.
OptimizeResult optimize_ordered(const Distribution& dist, double left_cost,
                                double right_cost);

// Minimum expected number of comparisons (unit edge costs).
OptimizeResult optimize_uniform(const Distribution& dist);

// Generalized DP over m pluggable split methods; each node stores the argmin
// method id (1-based position in `methods`). O(m n^3) time.
OptimizeResult optimize_general(const Distribution& dist,
                                const std::vector<SplitMethod>& methods);

// Expected cost recomputed from the tree itself (never from a DP table):
// sum_i p(i) * (edge costs along the root-to-leaf-i path). Requires every
// internal node to carry edge costs.
double evaluate_tree(const DecisionTree& tree, const Distribution& dist);

// Generalized evaluation: sum over internal nodes of the node's method cost
// C_k(p', p'', i, j, s), re-evaluated from `methods` via the stored ids.
double evaluate_tree(const DecisionTree& tree, const Distribution& dist,
                     const std::vector<SplitMethod>& methods);

}  // namespace branchtree
