#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lpdo/errors.hpp"
#include "lpdo/operator.hpp"
#include "lpdo/rat_expr.hpp"

namespace lpdo {

struct ParseOptions {
  /// Names accepted as parameters.
  std::vector<std::string> parameters;
  /// Accept any non-reserved identifier as a parameter (used when reading
  /// structured documents produced by the printer).
  bool implicit_parameters = false;
};

/// Parses an operator.  `*` is the operator product, so "Dx*x" is
/// x*Dx + 1.  Throws ParseError with a 1-based line and column.
///
///   expression ::= term (('+' | '-') term)*
///   term       ::= unary (('*' | '/') unary)*
///   unary      ::= ('-' | '+') unary | factor
///   factor     ::= atom ['^' integer]
///   atom       ::= integer | x | y | i | parameter | sqrt '(' ['-'] integer ')'
///                | Dx | Dy | '(' expression ')'
///
/// Division is allowed by nonzero functions when the left operand is a
/// function, and by constants otherwise.  The aliases ∂x, ∂y and the
/// minus sign U+2212 are accepted.
LPDO parse_operator(std::string_view text, const ParseOptions& options = {});

/// Parses a function (an operator of order 0); throws ParseError otherwise.
RatExpr parse_function(std::string_view text, const ParseOptions& options = {});

/// Splits a comma separated parameter list, trimming blanks.
std::vector<std::string> split_parameters(std::string_view list);

}  // namespace lpdo
