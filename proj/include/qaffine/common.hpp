#pragma once

#include <stdexcept>
#include <string>

namespace qaffine {

/// Largest input-register width the statevector backend accepts (2^(n+1)
/// amplitudes are allocated per register).
inline constexpr int kMaxRegisterInputs = 20;

/// Largest n for which the exhaustive affine-completion search is allowed
/// (the search visits all 2^(n+1) candidate functions).
inline constexpr int kMaxSearchInputs = 12;

enum class Mode { Linear, Affine };

/// Thrown when a request would exceed a configured register limit. Mapped to
/// exit code 3 by the CLI.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Function-file syntax error with 1-based position information.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace qaffine
