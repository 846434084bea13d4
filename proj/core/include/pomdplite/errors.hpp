#pragma once

#include <stdexcept>
#include <string>

namespace pomdplite {

/// Bad argument or configuration (out-of-range index, malformed flag, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation invalid in the current state (illegal action, terminal state, ...).
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A transition had zero likelihood under every hypothesis in the belief.
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative solver failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
    double residual;
};

/// Requested capability is not available for this model.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Search exceeded its configured node budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text-format syntax or validation failure, with source position.
struct ParseError : std::runtime_error {
    ParseError(int line_, int column_, const std::string& message)
        : std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) +
                             ": " + message),
          line(line_), column(column_) {}
    int line;
    int column;
};

}  // namespace pomdplite
