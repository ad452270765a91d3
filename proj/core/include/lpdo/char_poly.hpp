#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpdo/operator.hpp"
#include "lpdo/rat_expr.hpp"

namespace lpdo {

/// P(w) = sum_k a_{n-k,k} w^(n-k).  coeffs[k] = a_{n-k,k}, so the vector
/// lists coefficients by descending power of w and always has n + 1 entries.
struct CharPoly {
  int n = 0;
  std::vector<RatExpr> coeffs;

  /// Actual degree in w (-1 for the zero polynomial).
  int degree() const;
  RatExpr operator()(const RatExpr& w) const;
  /// Formal derivative in w, kept at nominal order n - 1.
  CharPoly derivative() const;
  /// Coefficients by ascending power of w, trimmed.
  std::vector<RatExpr> ascending() const;
  std::string to_string() const;
};

/// Reads the top homogeneous part.  Throws std::invalid_argument for
/// operators of order < 1.
CharPoly char_poly(const LPDO& a);

struct Root {
  RatExpr value;
  int multiplicity = 1;
  bool at_infinity = false;
  /// Radicals the root needs beyond those already in the coefficients.
  std::vector<ConstScalar::Radicand> extension_used;

  std::string to_string() const { return at_infinity ? "inf" : value.to_string(); }
};

struct RootSet {
  /// Finite roots in canonical textual order, then the root at infinity.
  std::vector<Root> roots;
  /// Factor of P left over after removing every root found, ascending
  /// coefficients; empty when P split completely.
  std::vector<RatExpr> unresolved;

  int total_multiplicity() const;
};

/// Throws std::invalid_argument when every coefficient vanishes.
RootSet find_roots(const CharPoly& p);

/// Multiplicity of w as a root of P via successive derivatives (0 when not
/// a root).
int root_multiplicity(const CharPoly& p, const RatExpr& w);

/// Roots (with multiplicity) of a univariate polynomial with ascending
/// coefficients; `unresolved` receives the factor without roots found.
std::vector<std::pair<RatExpr, int>> univariate_roots(std::vector<RatExpr> ascending,
                                                      std::vector<RatExpr>* unresolved = nullptr);

}  // namespace lpdo
