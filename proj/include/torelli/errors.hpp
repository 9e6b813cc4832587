#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torelli {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid graph data: duplicate identifiers, unknown
/// endpoints, a disconnected graph, or lookups of missing ids.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked outside its stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Rejected input text.  Positions are 1-based; line 0 means the error
/// concerns the input as a whole rather than a particular line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(render(line, column, message)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string render(std::size_t line, std::size_t column,
                            const std::string& message) {
    if (line == 0) return "input: " + message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace torelli
