#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace degratio {

// Invalid argument values (k = 0, n < 2, out-of-range anchors, ...).
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input does not belong to the class an operation is defined on.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed graph text. Line and column are 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// An exhaustive search ran out of its assignment budget. The answer is unknown,
// never approximated.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(std::uint64_t explored)
      : std::runtime_error("inexact: budget exceeded after " + std::to_string(explored) +
                           " assignments"),
        explored_(explored) {}

  std::uint64_t explored() const noexcept { return explored_; }

 private:
  std::uint64_t explored_;
};

// A guarantee that should hold by construction was violated.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace degratio
