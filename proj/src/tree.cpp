#include "branchtree/tree.hpp"

#include <string>

namespace branchtree {

DecisionTree DecisionTree::leaf(int item) {
    auto node = std::make_unique<Node>();
    node->item = item;
    return DecisionTree(std::move(node));
}

std::unique_ptr<DecisionTree::Node> DecisionTree::clone(const Node* node) {
    if (!node) return nullptr;
    auto out = std::make_unique<Node>();
    out->item = node->item;
    out->split = node->split;
    out->method = node->method;
    out->edge_costs = node->edge_costs;
    out->left = clone(node->left.get());
    out->right = clone(node->right.get());
    return out;
}

namespace {

void count_nodes(const DecisionTree::Node* node, int& leaves, int& internals) {
    if (!node) return;
    if (node->is_leaf()) {
        ++leaves;
        return;
    }
    ++internals;
    count_nodes(node->left.get(), leaves, internals);
    count_nodes(node->right.get(), leaves, internals);
}

void collect_inorder(const DecisionTree::Node* node, std::vector<int>& items) {
    if (!node) return;
    if (node->is_leaf()) {
        items.push_back(node->item);
        return;
    }
    collect_inorder(node->left.get(), items);
    collect_inorder(node->right.get(), items);
}

// Returns the covered interval [i,j]; throws on structural violations.
std::pair<int, int> check_node(const DecisionTree::Node* node) {
    if (node->is_leaf()) {
        return {node->item, node->item};
    }
    if (!node->left || !node->right) {
        fail(ErrorCode::MalformedInput, "internal node with a single child");
    }
    auto [li, lj] = check_node(node->left.get());
    auto [ri, rj] = check_node(node->right.get());
    if (lj + 1 != ri || node->split != ri) {
        fail(ErrorCode::MalformedInput,
             "split " + std::to_string(node->split) +
                 " inconsistent with subtree intervals [" + std::to_string(li) +
                 "," + std::to_string(lj) + "] / [" + std::to_string(ri) + "," +
                 std::to_string(rj) + "]");
    }
    return {li, rj};
}

std::unique_ptr<DecisionTree::Node> stamp(const DecisionTree::Node* node,
                                          double left_cost, double right_cost) {
    auto out = std::make_unique<DecisionTree::Node>();
    out->item = node->item;
    out->split = node->split;
    out->method = node->method;
    if (!node->is_leaf()) {
        out->edge_costs = EdgeCosts{left_cost, right_cost};
        out->left = stamp(node->left.get(), left_cost, right_cost);
        out->right = stamp(node->right.get(), left_cost, right_cost);
    }
    return out;
}

std::unique_ptr<DecisionTree::Node> mirror(const DecisionTree::Node* node, int n) {
    auto out = std::make_unique<DecisionTree::Node>();
    if (node->is_leaf()) {
        out->item = n + 1 - node->item;
        return out;
    }
    out->method = node->method;
    if (node->edge_costs) {
        out->edge_costs = EdgeCosts{node->edge_costs->right, node->edge_costs->left};
    }
    out->left = mirror(node->right.get(), n);
    out->right = mirror(node->left.get(), n);
    // new left subtree now ends at n+1-split; new split is one past it
    out->split = n + 2 - node->split;
    return out;
}

}  // namespace

int DecisionTree::leaf_count() const {
    int leaves = 0, internals = 0;
    count_nodes(root_.get(), leaves, internals);
    return leaves;
}

int DecisionTree::internal_count() const {
    int leaves = 0, internals = 0;
    count_nodes(root_.get(), leaves, internals);
    return internals;
}

std::vector<int> DecisionTree::inorder_items() const {
    std::vector<int> items;
    collect_inorder(root_.get(), items);
    return items;
}

void DecisionTree::validate_alphabetic(int n) const {
    if (!root_) {
        fail(ErrorCode::MalformedInput, "empty tree");
    }
    auto items = inorder_items();
    if (static_cast<int>(items.size()) != n) {
        fail(ErrorCode::LeafCountMismatch,
             "tree has " + std::to_string(items.size()) + " leaves, expected " +
                 std::to_string(n));
    }
    for (int k = 0; k < n; ++k) {
        if (items[static_cast<size_t>(k)] != k + 1) {
            fail(ErrorCode::MalformedInput,
                 "leaf sequence is not 1.." + std::to_string(n));
        }
    }
    check_node(root_.get());
}

DecisionTree DecisionTree::with_edge_costs(double left_cost, double right_cost) const {
    if (!root_) return {};
    return DecisionTree(stamp(root_.get(), left_cost, right_cost));
}

DecisionTree DecisionTree::mirrored(int n) const {
    if (!root_) return {};
    return DecisionTree(mirror(root_.get(), n));
}

}  // namespace branchtree
