#pragma once

#include <string>

#include "lpdo/const_scalar.hpp"
#include "lpdo/poly.hpp"
#include "lpdo/rat_expr.hpp"

namespace lpdo {

enum class TextStyle { Plain, Latex };

std::string format(const ConstScalar& c, TextStyle style);
std::string format(const Poly& p, TextStyle style);
/// Rational functions are printed with integer coefficients and the common
/// denominator pulled out: "(y - x)/2", "a/(x + y)".
std::string format(const RatExpr& a, TextStyle style);

/// Display name of a symbol; in LaTeX Greek parameter names become macros.
std::string format_symbol(Symbol::Id id, TextStyle style);

}  // namespace lpdo
