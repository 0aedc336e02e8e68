#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcfl {

/** Raised for malformed grammar or graph text. Line and column are 1-based. */
class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, arity_mismatch, duplicate_variable, variable_reused, unknown_variable, missing_start };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        kind_(kind), line_(line), column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/** Raised when a grammar fails a structural precondition. */
class GrammarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Raised when a tuple or fact budget is exhausted. */
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mcfl
