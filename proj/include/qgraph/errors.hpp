#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace qgraph {

/// Malformed or inconsistent input (bad file, dangling edge, bad weight).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what, std::optional<int> line = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + what : what),
        line_(line) {}

  std::optional<int> line() const { return line_; }

 private:
  std::optional<int> line_;
};

/// A precondition of a theorem-level operation does not hold (e.g. the graph
/// is disconnected, or the boundary is empty where one is required).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity contradicts a bracketing or counting statement that
/// must hold. Never expected; signals a bug or numerical breakdown.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Eigensolver non-convergence or pairing failure.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qgraph
