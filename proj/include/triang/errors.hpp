#ifndef TRIANG_ERRORS_HPP
#define TRIANG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triang {

// Malformed or inconsistent input: bad text, wrong arity, non-triangular data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A syntax error with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A mathematical property that must hold for every triangular input failed.
// Either the implementation is wrong or a proven property failed.
class PropertyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace triang

#endif  // TRIANG_ERRORS_HPP
