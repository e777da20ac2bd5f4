#pragma once

#include <stdexcept>
#include <string>

namespace qal {

/// Malformed or unsupported program text. Carries the 1-based source
/// position of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Malformed calibration document (bad JSON, missing fields, out-of-range
/// fidelities, dangling or duplicate edges).
class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No legal allocation exists: too few physical qubits, or a required
/// qubit pair is unreachable on the coupling graph.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configurable resource cap was exceeded (search frontier, oracle
/// enumeration, simulator state support).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qal
