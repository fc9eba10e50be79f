#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dreduce {

enum class ErrorKind {
  ZeroPolynomial,
  NoLeader,
  UnknownIndeterminate,
  DuplicateEntry,
  InconsistentSystem,
  UnsupportedCell,
  SyntaxError,
  UndeclaredSymbol,
  GridTooCoarse,
  ShapeMismatch,
  UnknownCheck,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column)
      : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

}  // namespace dreduce
