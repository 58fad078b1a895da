#include "branchtree/optimizer.hpp"

#include <cmath>
#include <limits>

namespace branchtree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::unique_ptr<DecisionTree::Node> extract(const DPTable& table, int i, int j) {
    auto node = std::make_unique<DecisionTree::Node>();
    if (i == j) {
        node->item = i;
        return node;
    }
    const int s = table.split(i, j);
    node->split = s;
    node->method = table.method(i, j);
    node->left = extract(table, i, s - 1);
    node->right = extract(table, s, j);
    return node;
}

void stamp_static_bias(DecisionTree::Node* node, const StaticCosts& costs) {
    if (!node || node->is_leaf()) return;
    if (node->method == 1) {
        node->edge_costs = EdgeCosts{costs.c0, costs.c1};
    } else {
        node->edge_costs = EdgeCosts{costs.c1, costs.c0};
    }
    stamp_static_bias(node->left.get(), costs);
    stamp_static_bias(node->right.get(), costs);
}

void stamp_fixed(DecisionTree::Node* node, double left_cost, double right_cost) {
    if (!node || node->is_leaf()) return;
    node->edge_costs = EdgeCosts{left_cost, right_cost};
    stamp_fixed(node->left.get(), left_cost, right_cost);
    stamp_fixed(node->right.get(), left_cost, right_cost);
}

OptimizeResult finish(const Distribution& dist, DPTable table,
                      std::unique_ptr<DecisionTree::Node> root, std::string model) {
    OptimizeResult result;
    result.expected_cost = table.cost(1, dist.size());
    result.tree = DecisionTree(std::move(root));
    result.table = std::move(table);
    result.model = std::move(model);
    return result;
}

}  // namespace

OptimizeResult optimize_static(const Distribution& dist, const StaticCosts& costs) {
    const int n = dist.size();
    const double c0 = costs.c0, c1 = costs.c1;
    DPTable table(n);

    // c(i,i) = 0. Fill by increasing interval length; for each interval take
    // the cheaper of the two bias orders at the best split. Ties resolve to
    // the smallest s, then to the left-edge-costs-c0 orientation, so results
    // are fully deterministic.
    for (int len = 2; len <= n; ++len) {
        for (int i = 1; i + len - 1 <= n; ++i) {
            const int j = i + len - 1;
            double best = kInf;
            int best_s = 0, best_k = 0;
            for (int s = i + 1; s <= j; ++s) {
                const double left_mass = dist.prefix(s - 1) - dist.prefix(i - 1);
                const double right_mass = dist.prefix(j) - dist.prefix(s - 1);
                const double subtrees = table.cost(i, s - 1) + table.cost(s, j);
                const double biased = c0 * left_mass + c1 * right_mass + subtrees;
                const double swapped = c1 * left_mass + c0 * right_mass + subtrees;
                if (biased < best) {
                    best = biased;
                    best_s = s;
                    best_k = 1;
                }
                if (swapped < best) {
                    best = swapped;
                    best_s = s;
                    best_k = 2;
                }
            }
            table.set(i, j, best, best_s, best_k);
        }
    }

    auto root = extract(table, 1, n);
    stamp_static_bias(root.get(), costs);
    return finish(dist, std::move(table), std::move(root),
                  "static(c0=" + std::to_string(c0) + ",c1=" +
                      std::to_string(c1) + ")");
}

OptimizeResult optimize_ordered(const Distribution& dist, double left_cost,
                                double right_cost) {
    if (!(left_cost > 0.0) || !(right_cost > 0.0) ||
        !std::isfinite(left_cost) || !std::isfinite(right_cost)) {
        fail(ErrorCode::NonPositiveCost, "edge costs must be positive and finite");
    }
    const int n = dist.size();
    DPTable table(n);
    for (int len = 2; len <= n; ++len) {
        for (int i = 1; i + len - 1 <= n; ++i) {
            const int j = i + len - 1;
            double best = kInf;
            int best_s = 0;
            for (int s = i + 1; s <= j; ++s) {
                const double cand =
                    left_cost * (dist.prefix(s - 1) - dist.prefix(i - 1)) +
                    right_cost * (dist.prefix(j) - dist.prefix(s - 1)) +
                    table.cost(i, s - 1) + table.cost(s, j);
                if (cand < best) {
                    best = cand;
                    best_s = s;
                }
            }
            table.set(i, j, best, best_s, 1);
        }
    }
    auto result = finish(dist, std::move(table),
                         "ordered(left=" + std::to_string(left_cost) + ",right=" +
                             std::to_string(right_cost) + ")");
    stamp_fixed(const_cast<DecisionTree::Node*>(result.tree.root()), left_cost,
                right_cost);
    return result;
}

OptimizeResult optimize_uniform(const Distribution& dist) {
    auto result = optimize_ordered(dist, 1.0, 1.0);
    result.model = "uniform";
    return result;
}

OptimizeResult optimize_general(const Distribution& dist,
                                const std::vector<SplitMethod>& methods) {
    if (methods.empty()) {
        fail(ErrorCode::NoMethods, "at least one split method is required");
    }
    const int n = dist.size();
    const int m = static_cast<int>(methods.size());
    DPTable table(n);

    auto method_cost = [&](int k, double pl, double pr, int i, int j, int s) {
        const double c = methods[static_cast<size_t>(k - 1)].cost(pl, pr, i, j, s);
        if (!(c >= 0.0) || !std::isfinite(c)) {
            fail(ErrorCode::MethodCostNegative,
                 "method " + std::to_string(k) + " returned a negative or "
                 "non-finite cost");
        }
        return c;
    };

    for (int len = 2; len <= n; ++len) {
        for (int i = 1; i + len - 1 <= n; ++i) {
            const int j = i + len - 1;
            double best = kInf;
            int best_s = 0, best_k = 0;
            for (int s = i + 1; s <= j; ++s) {
                const double pl = dist.prefix(s - 1) - dist.prefix(i - 1);
                const double pr = dist.prefix(j) - dist.prefix(s - 1);
                const double subtrees = table.cost(i, s - 1) + table.cost(s, j);
                for (int k = 1; k <= m; ++k) {
                    const double cand = method_cost(k, pl, pr, i, j, s) + subtrees;
                    if (cand < best) {
                        best = cand;
                        best_s = s;
                        best_k = k;
                    }
                }
            }
            table.set(i, j, best, best_s, best_k);
        }
    }

    std::string model = "general(m=" + std::to_string(m);
    for (const auto& method : methods) {
        if (!method.label.empty()) model += "," + method.label;
    }
    model += ")";
    return finish(dist, std::move(table), std::move(model));
}

namespace {

double path_costs(const DecisionTree::Node* node, const Distribution& dist,
                  int i, int j) {
    if (node->is_leaf()) return 0.0;
    if (!node->edge_costs) {
        fail(ErrorCode::MissingBias,
             "internal node lacks an edge-cost assignment");
    }
    const int s = node->split;
    const double left_mass = dist.prefix(s - 1) - dist.prefix(i - 1);
    const double right_mass = dist.prefix(j) - dist.prefix(s - 1);
    return node->edge_costs->left * left_mass +
           node->edge_costs->right * right_mass +
           path_costs(node->left.get(), dist, i, s - 1) +
           path_costs(node->right.get(), dist, s, j);
}

double node_costs(const DecisionTree::Node* node, const Distribution& dist,
                  const std::vector<SplitMethod>& methods, int i, int j) {
    if (node->is_leaf()) return 0.0;
    const int k = node->method;
    if (k < 1 || k > static_cast<int>(methods.size())) {
        fail(ErrorCode::IndexOutOfRange,
             "node method id " + std::to_string(k) + " outside [1," +
                 std::to_string(methods.size()) + "]");
    }
    const int s = node->split;
    const double pl = dist.prefix(s - 1) - dist.prefix(i - 1);
    const double pr = dist.prefix(j) - dist.prefix(s - 1);
    return methods[static_cast<size_t>(k - 1)].cost(pl, pr, i, j, s) +
           node_costs(node->left.get(), dist, methods, i, s - 1) +
           node_costs(node->right.get(), dist, methods, s, j);
}

}  // namespace

double evaluate_tree(const DecisionTree& tree, const Distribution& dist) {
    tree.validate_alphabetic(dist.size());
    return path_costs(tree.root(), dist, 1, dist.size());
}

double evaluate_tree(const DecisionTree& tree, const Distribution& dist,
                     const std::vector<SplitMethod>& methods) {
    if (methods.empty()) {
        fail(ErrorCode::NoMethods, "at least one split method is required");
    }
    tree.validate_alphabetic(dist.size());
    return node_costs(tree.root(), dist, methods, 1, dist.size());
}

}  // namespace branchtree
