#pragma once

#include <stdexcept>
#include <string>

namespace dltl {

// Malformed input text: formulas, lassos, models, rationals.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(std::move(message)), line_(line), column_(column) {}
  explicit ParseError(std::string message)
      : std::runtime_error(std::move(message)), line_(0), column_(0) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Structurally valid input that violates a semantic requirement
// (weight out of range, dead-end state, atom missing from an alphabet, ...).
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& message) : std::runtime_error(message) {}
};

// A witness produced by the search failed its independent re-evaluation.
// This is never a property of the input; it signals a bug in the checker
// itself and is surfaced as its own exit code by the command line tool.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace dltl
