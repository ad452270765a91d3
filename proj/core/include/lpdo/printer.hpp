#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lpdo/char_poly.hpp"
#include "lpdo/factorization.hpp"
#include "lpdo/format.hpp"
#include "lpdo/operator.hpp"

namespace lpdo {

enum class OutputFormat { Plain, Latex, Structured };

/// Throws std::invalid_argument for anything but plain, latex, structured.
OutputFormat parse_output_format(std::string_view name);

/// Terms by total order, then x-order, descending: "Dx*Dy + (x + 2)*Dy".
/// The plain form parses back to the same operator.
std::string format(const LPDO& a, TextStyle style);
std::string format(const FirstOrderFactor& f, TextStyle style);
/// "(A)*(B)*..." or "(A)\circ(B)".
std::string format_product(const std::vector<LPDO>& factors, TextStyle style);

/// Structured operator: {"order", "coeffs": [{"j", "k", "num", "den"}]}.
std::string to_structured(const LPDO& a);
/// Reads what to_structured writes; any non-reserved name is taken as a
/// parameter.  Throws ParseError on malformed documents.
LPDO from_structured(std::string_view document);

/// Full report of a factorization run: the selected outcome plus every
/// attempt that was made (one per root tried).
std::string render_outcome(const LPDO& input, const FactorizationOutcome& selected,
                           const std::vector<FactorizationOutcome>& attempts, OutputFormat fmt);

std::string render_chains(const LPDO& input, const std::vector<FactorChain>& chains, OutputFormat fmt);

std::string render_operator(const LPDO& a, OutputFormat fmt);

std::string render_char_poly(const CharPoly& p, const RootSet& roots, OutputFormat fmt);

/// Result of checking that a product of operators equals a target.
std::string render_verification(const LPDO& target, const std::vector<LPDO>& factors, const LPDO& difference,
                                OutputFormat fmt);

}  // namespace lpdo
