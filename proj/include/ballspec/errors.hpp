#pragma once

#include <stdexcept>
#include <string>

namespace ballspec {

struct ZeroArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidMode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GammaIsOne : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidGamma : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BranchViolation : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a root's residual stays above tolerance after refinement.
// index identifies the offending approximant; callers may raise the working
// precision and retry.
struct ConvergenceFailure : std::runtime_error {
    int index;
    explicit ConvergenceFailure(int root_index, const std::string& what)
        : std::runtime_error(what), index(root_index) {}
};

} // namespace ballspec
