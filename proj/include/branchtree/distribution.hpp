#pragma once

#include <vector>

#include "branchtree/error.hpp"

namespace branchtree {

// Probability distribution over n ordered outcomes, indexed 1..n.
// Weights are normalized on construction; prefix sums give O(1) interval
// masses. Immutable after construction.
class Distribution {
public:
    // Validates and normalizes. Zero weights are rejected unless allow_zero
    // is set; negative, non-finite, or all-zero inputs are always rejected.
    static Distribution from_weights(const std::vector<double>& weights,
                                     bool allow_zero = false);

    int size() const { return static_cast<int>(probs_.size()); }

    // p(i), 1-based.
    double prob(int i) const;

    // p(i,j) = sum_{k=i}^{j} p(k), via prefix-sum difference.
    double interval_prob(int i, int j) const;

    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& probs() const { return probs_; }

    // prefix(i) = p(1,i); prefix(0) = 0.
    double prefix(int i) const { return prefix_[static_cast<size_t>(i)]; }

    bool allows_zero() const { return allow_zero_; }

    // Same probabilities in reverse outcome order.
    Distribution reversed() const;

private:
    Distribution() = default;

    std::vector<double> weights_;
    std::vector<double> probs_;
    std::vector<double> prefix_;
    bool allow_zero_ = false;
};

inline Distribution make_distribution(const std::vector<double>& weights,
                                      bool allow_zero = false) {
    return Distribution::from_weights(weights, allow_zero);
}

inline double interval_prob(const Distribution& dist, int i, int j) {
    return dist.interval_prob(i, j);
}

}  // namespace branchtree
