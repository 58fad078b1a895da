#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "branchtree/error.hpp"

namespace branchtree {

// Cycle costs of a node's two outgoing edges.
struct EdgeCosts {
    double left;
    double right;
};

// Full alphabetic binary tree. A node splitting [i,j] at s sends items
// [i,s-1] left and [s,j] right; leaves carry the outcome index. Internal
// nodes record the split point, the split-method id that produced them, and
// (for edge-cost models) the per-edge cost assignment.
class DecisionTree {
public:
    struct Node {
        int item = 0;    // leaf outcome, 1-based; 0 for internal nodes
        int split = 0;   // s, 0 for leaves
        int method = 0;  // 1-based method id, 0 for leaves
        std::optional<EdgeCosts> edge_costs;
        std::unique_ptr<Node> left;
        std::unique_ptr<Node> right;

        bool is_leaf() const { return left == nullptr; }
    };

    DecisionTree() = default;
    explicit DecisionTree(std::unique_ptr<Node> root) : root_(std::move(root)) {}

    DecisionTree(const DecisionTree& other) : root_(clone(other.root_.get())) {}
    DecisionTree& operator=(const DecisionTree& other) {
        if (this != &other) root_ = clone(other.root_.get());
        return *this;
    }
    DecisionTree(DecisionTree&&) = default;
    DecisionTree& operator=(DecisionTree&&) = default;

    static DecisionTree leaf(int item);

    const Node* root() const { return root_.get(); }
    bool empty() const { return root_ == nullptr; }

    int leaf_count() const;
    int internal_count() const;

    // Leaf items in left-to-right order.
    std::vector<int> inorder_items() const;

    // Throws unless the in-order leaf sequence is exactly 1..n and every
    // node's split s satisfies i < s <= j for its covered interval.
    void validate_alphabetic(int n) const;

    // Copy with every internal node's edge costs replaced. Used to evaluate
    // a tree shape under a cost convention it was not optimized for.
    DecisionTree with_edge_costs(double left_cost, double right_cost) const;

    // Mirror image (reverses outcome order); item i becomes n+1-i.
    DecisionTree mirrored(int n) const;

private:
    static std::unique_ptr<Node> clone(const Node* node);

    std::unique_ptr<Node> root_;
};

}  // namespace branchtree
