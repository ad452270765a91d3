#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpdo/const_scalar.hpp"
#include "lpdo/poly.hpp"
#include "lpdo/symbol.hpp"

namespace lpdo {

/// Exact rational function in x, y, parameters and jet symbols.
///
/// Canonical form: gcd(num, den) = 1 and den has leading coefficient 1
/// under the graded lexicographic order.  Equal values therefore have
/// identical representations and == is structural.  Values are immutable;
/// every operation returns a new canonical value.
class RatExpr {
public:
  RatExpr() : den_(1) {}
  RatExpr(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatExpr(const mpq_class& value) : num_(ConstScalar(value)), den_(1) {}  // NOLINT
  RatExpr(const ConstScalar& value) : num_(value), den_(1) {}  // NOLINT
  explicit RatExpr(Poly num) : num_(std::move(num)), den_(1) {}

  /// Canonicalises num/den.  Throws DivisionByZero when den is zero.
  static RatExpr make(Poly num, Poly den);
  static RatExpr symbol(Symbol::Id id) { return RatExpr(Poly::var(id)); }
  static RatExpr x() { return symbol(Symbol::x); }
  static RatExpr y() { return symbol(Symbol::y); }
  static RatExpr parameter(std::string_view name) { return symbol(Symbol::parameter(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// Value of a constant expression.
  std::optional<ConstScalar> constant_value() const;
  bool contains(Symbol::Id id) const { return num_.contains(id) || den_.contains(id); }
  bool contains_jets() const;
  std::vector<Symbol::Id> variables() const;
  /// Generators of the constant tower used by the coefficients.
  std::vector<ConstScalar::Radicand> radical_generators() const;

  RatExpr operator-() const;
  RatExpr& operator+=(const RatExpr& other) { return *this = *this + other; }
  RatExpr& operator-=(const RatExpr& other) { return *this = *this - other; }
  RatExpr& operator*=(const RatExpr& other) { return *this = *this * other; }
  RatExpr& operator/=(const RatExpr& other) { return *this = *this / other; }
  friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  /// Throws DivisionByZero when b is zero.
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
  friend RatExpr diff(const RatExpr& a, Direction d);
  RatExpr inverse() const;
  RatExpr pow(unsigned e) const;

  friend bool operator==(const RatExpr& a, const RatExpr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatExpr& a, const RatExpr& b) { return !(a == b); }

  /// Canonical plain-text rendering (re-parses to the same value).
  std::string to_string() const;

private:
  struct Coprime {};
  RatExpr(Poly num, Poly den, Coprime);

  Poly num_;
  Poly den_;
};

/// Total derivative in x or y (parameters are constants, jets shift).
RatExpr diff(const RatExpr& a, Direction d);
/// Repeated derivative d^dx/dx^dx d^dy/dy^dy.
RatExpr diff(const RatExpr& a, int dx, int dy);

inline bool is_zero(const RatExpr& a) { return a.is_zero(); }

using Assignment = std::map<Symbol::Id, RatExpr>;

/// Simultaneous substitution of symbols.  Throws SubstitutionError when the
/// denominator vanishes identically.
RatExpr substitute(const RatExpr& a, const Assignment& assignments);

/// r with r*r == a when numerator and denominator are perfect squares over
/// the constant tower; the square-free part of a rational leading
/// coefficient is adjoined as a radical.  The root is chosen with a
/// positive leading coordinate.
std::optional<RatExpr> perfect_square_root(const RatExpr& a);
std::optional<Poly> perfect_square_root(const Poly& p);

/// Union of the tower generators used by several values, sorted.
std::vector<ConstScalar::Radicand> radical_generators(const std::vector<RatExpr>& values);

}  // namespace lpdo
