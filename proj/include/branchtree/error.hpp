#pragma once

#include <stdexcept>
#include <string>

namespace branchtree {

enum class ErrorCode {
    EmptyInput,
    NegativeWeight,
    ZeroWeight,
    NonFiniteWeight,
    IndexOutOfRange,
    InvertedInterval,
    NoMethods,
    MethodCostNegative,
    LeafCountMismatch,
    MissingBias,
    NonPositiveCost,
    OutOfRange,
    TooLarge,
    CutoffCountMismatch,
    LabelCountMismatch,
    UnsortedCutoffs,
    ZeroN,
    MalformedInput,
};

const char* error_code_name(ErrorCode code);

// Validation failure on caller-supplied input. Carries a stable code so
// callers (and the CLI exit-code mapping) can react without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace branchtree
