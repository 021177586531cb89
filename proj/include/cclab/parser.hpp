#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cclab/errors.hpp"
#include "cclab/poly2.hpp"

namespace cclab {

struct ParseDiagnostic {
  enum class Kind { lex, syntax, semantic };

  std::size_t byte_offset = 0;
  std::string message;
  Kind kind = Kind::syntax;
};

const char* to_string(ParseDiagnostic::Kind kind);

class ParseError : public Error {
 public:
  ParseError(ParseDiagnostic diag, std::string component = {});
  const ParseDiagnostic& diagnostic() const noexcept { return diag_; }
  /// Which part of a larger input failed ("dx", "dy", a fixture name...), or empty.
  const std::string& component() const noexcept { return component_; }

 private:
  ParseDiagnostic diag_;
  std::string component_;
};

// Resource guards so hostile input fails with a diagnostic instead of
// exhausting time or memory.
struct ParserLimits {
  unsigned max_exponent = 1024;
  int max_degree = 128;
  unsigned max_nesting = 256;
  std::size_t max_coefficient_bits = std::size_t{1} << 20;
};

/// Parses an expression over the two declared variables into canonical form.
///
/// Grammar (whitespace ignored):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?        right-associative
///   primary := integer | identifier | '(' expr ')'
/// Division and exponents only accept constant operands.
Poly2 parse_polynomial(std::string_view text, const VarNames& vars, const ParserLimits& limits = {});

}  // namespace cclab
