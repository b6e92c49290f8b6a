#pragma once

#include <stdexcept>
#include <string>

namespace chernratio {

/// Invalid input data: violated type invariants, malformed text, degenerate
/// geometry (c2(S) = 0).
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A vector length does not match the ambient dimension contract.
struct DimensionMismatchError : ValidationError {
  explicit DimensionMismatchError(const std::string& msg) : ValidationError(msg) {}
};

/// The request is mathematically unsatisfiable (target outside the attainable set).
struct InfeasibleError : std::domain_error {
  explicit InfeasibleError(const std::string& msg) : std::domain_error(msg) {}
};

/// An iterative solver hit its iteration or size cap before reaching the
/// requested tolerance.
struct IterationLimitError : std::runtime_error {
  explicit IterationLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two computation paths that must agree did not. Signals a defect in this
/// library, not bad user input.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace chernratio
