#pragma once

#include <stdexcept>
#include <string>

namespace qdga {

/// Malformed input text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A structure failed one of its invariants (d^2 != 0, wrong degree, ...).
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A differential needed for a cohomology computation is not stored.
class MissingDifferential : public std::runtime_error {
 public:
  explicit MissingDifferential(int degree)
      : std::runtime_error("differential d^" + std::to_string(degree) + " is not stored"), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// Degreewise matrices that do not commute with the differentials.
class ChainMapError : public std::runtime_error {
 public:
  ChainMapError(int degree, std::size_t basis_index, const std::string& label)
      : std::runtime_error("chain map fails to commute with d in degree " + std::to_string(degree) +
                           " on basis element " + label),
        degree_(degree),
        basis_index_(basis_index) {}
  int degree() const { return degree_; }
  std::size_t basis_index() const { return basis_index_; }

 private:
  int degree_;
  std::size_t basis_index_;
};

/// The instance is outside what an operation can decide (nonlinear
/// homotopy problem, truncation that never stabilizes, ...).
class ScopeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qdga
