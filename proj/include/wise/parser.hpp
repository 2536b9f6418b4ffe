#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "wise/ast.hpp"

namespace wise {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// Parses a whole IMP program. Consumes all non-comment input; throws
// ParseError on any token or structure violation.
StmtPtr parse_program(std::string_view text);

}  // namespace wise
