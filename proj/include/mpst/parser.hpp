#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mpst/syntax.hpp"

namespace mpst {

/// Syntax or validation error, carrying the 1-based line/column of the
/// offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Grammar (whitespace-insensitive):
//
//   global  = "end" | ID "->" ID choice | "rec" ID "." global | ID
//   choice  = ":" ID [ "." global ] | "{" ID [ ";" global ] { "," ID [ ";" global ] } "}"
//   process = "0" | ID ("!"|"?") pbranch | "rec" ID "." process | ID
//   pbranch = ID [ "." process ] | "{" ID [ ";" process ] { "," ... } "}"
//   network = ID "::" process { "|" ID "::" process }
//   trace   = comm { "." comm }        comm = ID ID ID | ID "->" ID ":" ID
//
// An omitted continuation stands for `end` / `0`.

GlobalType parse_global(std::string_view text);
Process parse_process(std::string_view text);
Network parse_network(std::string_view text);
/// The empty (or all-whitespace) string parses as the empty trace.
Trace parse_trace(std::string_view text);
Communication parse_communication(std::string_view text);

}  // namespace mpst
