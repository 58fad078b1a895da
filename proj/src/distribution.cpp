#include "branchtree/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace branchtree {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::ZeroWeight: return "ZeroWeight";
        case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InvertedInterval: return "InvertedInterval";
        case ErrorCode::NoMethods: return "NoMethods";
        case ErrorCode::MethodCostNegative: return "MethodCostNegative";
        case ErrorCode::LeafCountMismatch: return "LeafCountMismatch";
        case ErrorCode::MissingBias: return "MissingBias";
        case ErrorCode::NonPositiveCost: return "NonPositiveCost";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::CutoffCountMismatch: return "CutoffCountMismatch";
        case ErrorCode::LabelCountMismatch: return "LabelCountMismatch";
        case ErrorCode::UnsortedCutoffs: return "UnsortedCutoffs";
        case ErrorCode::ZeroN: return "ZeroN";
        case ErrorCode::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

Distribution Distribution::from_weights(const std::vector<double>& weights,
                                        bool allow_zero) {
    if (weights.empty()) {
        fail(ErrorCode::EmptyInput, "weights must be nonempty");
    }
    for (size_t k = 0; k < weights.size(); ++k) {
        const double w = weights[k];
        if (!std::isfinite(w)) {
            fail(ErrorCode::NonFiniteWeight,
                 "weight " + std::to_string(k + 1) + " is not finite");
        }
        if (w < 0.0) {
            fail(ErrorCode::NegativeWeight,
                 "weight " + std::to_string(k + 1) + " is negative");
        }
        if (w == 0.0 && !allow_zero) {
            fail(ErrorCode::ZeroWeight,
                 "weight " + std::to_string(k + 1) +
                     " is zero (pass allow_zero to admit zero-mass outcomes)");
        }
    }

    // Fixed left-to-right summation order, for determinism.
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) {
        fail(ErrorCode::ZeroWeight, "weights sum to zero");
    }

    Distribution d;
    d.weights_ = weights;
    d.allow_zero_ = allow_zero;
    d.probs_.reserve(weights.size());
    for (double w : weights) d.probs_.push_back(w / total);
    d.prefix_.resize(weights.size() + 1, 0.0);
    for (size_t k = 0; k < d.probs_.size(); ++k) {
        d.prefix_[k + 1] = d.prefix_[k] + d.probs_[k];
    }
    return d;
}

double Distribution::prob(int i) const {
    if (i < 1 || i > size()) {
        fail(ErrorCode::IndexOutOfRange,
             "index " + std::to_string(i) + " outside [1," +
                 std::to_string(size()) + "]");
    }
    return probs_[static_cast<size_t>(i - 1)];
}

double Distribution::interval_prob(int i, int j) const {
    if (i < 1 || j > size()) {
        fail(ErrorCode::IndexOutOfRange,
             "interval [" + std::to_string(i) + "," + std::to_string(j) +
                 "] outside [1," + std::to_string(size()) + "]");
    }
    if (i > j) {
        fail(ErrorCode::InvertedInterval,
             "interval [" + std::to_string(i) + "," + std::to_string(j) +
                 "] is inverted");
    }
    return prefix_[static_cast<size_t>(j)] - prefix_[static_cast<size_t>(i - 1)];
}

Distribution Distribution::reversed() const {
    std::vector<double> w(weights_.rbegin(), weights_.rend());
    return from_weights(w, allow_zero_);
}

}  // namespace branchtree
