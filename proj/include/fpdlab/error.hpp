// Error types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpdlab {

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Exponent vectors of unequal length were compared or combined.
class dimension_mismatch_error : public error {
public:
  using error::error;
};

/// Operands live over distinct coefficient fields.
class incompatible_coefficients_error : public error {
public:
  using error::error;
};

/// Operands belong to structurally different ring presentations.
class ring_mismatch_error : public error {
public:
  using error::error;
};

class invalid_input_error : public error {
public:
  using error::error;
};

/// A stated precondition of a construction failed (e.g. a non-nilpotent
/// amalgamation ideal).
class precondition_error : public error {
public:
  using error::error;
};

/// A resource cap was hit; carries a partial-state diagnostic.
class budget_exceeded_error : public error {
public:
  budget_exceeded_error(const std::string& what, std::string diagnostic)
      : error(what), diagnostic_(std::move(diagnostic)) {}
  const std::string& diagnostic() const { return diagnostic_; }

private:
  std::string diagnostic_;
};

class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class io_error : public error {
public:
  using error::error;
};

}  // namespace fpdlab
