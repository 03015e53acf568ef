#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistspin {

// Raised for invalid inputs to a mathematical operation (bad ring tags,
// non-coprime parameters, malformed presentations, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text-format error carrying a 1-based source position.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : DomainError("line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  // The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace twistspin
