#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conejac {

/// Malformed edge-list file or graph spec string. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        message_(what),
        line_(line),
        column_(column) {}

  /// The description without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// An enumeration oracle was asked to work on a graph above its size limits.
class GuardViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

} // namespace conejac
