#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpdo/const_scalar.hpp"
#include "lpdo/symbol.hpp"

namespace lpdo {

/// A power product of symbols, stored sparsely as (id, exponent) pairs
/// sorted by id.
class Monomial {
public:
  using Factor = std::pair<Symbol::Id, std::uint32_t>;

  Monomial() = default;
  static Monomial var(Symbol::Id id, std::uint32_t exponent = 1);

  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(Symbol::Id id) const;
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// this / other when other divides this.
  std::optional<Monomial> divide(const Monomial& other) const;
  /// Same monomial with the exponent of `id` replaced.
  Monomial with_exponent(Symbol::Id id, std::uint32_t exponent) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic comparison (-1, 0, 1); lower ids are more
/// significant in the lexicographic tie-break.
int compare(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over the multiquadratic constant field.
/// Terms are kept sorted by decreasing monomial and never carry a zero
/// coefficient.
class Poly {
public:
  struct Term {
    Monomial mono;
    ConstScalar coeff;
  };

  Poly() = default;
  Poly(const ConstScalar& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(ConstScalar(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(Symbol::Id id);
  static Poly term(Monomial mono, ConstScalar coeff);
  /// Sorts, merges and drops zero terms.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Constant value; only meaningful when is_constant().
  ConstScalar constant_value() const;
  const Term& lead() const { return terms_.front(); }
  const ConstScalar& lead_coeff() const { return terms_.front().coeff; }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(Symbol::Id id) const;
  std::vector<Symbol::Id> variables() const;
  bool contains(Symbol::Id id) const;
  bool all_coefficients_rational() const;

  /// Coefficients in `id`: result[k] multiplies id^k.
  std::vector<Poly> coeffs_in(Symbol::Id id) const;
  static Poly from_coeffs(Symbol::Id id, const std::vector<Poly>& coeffs);

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const ConstScalar& c) const;
  Poly times_term(const Monomial& m, const ConstScalar& c) const;
  Poly pow(unsigned e) const;

  /// Partial derivative with respect to one symbol.
  Poly partial(Symbol::Id id) const;
  /// Total derivative: coordinates differentiate to 1 or 0, parameters to
  /// 0, jets shift their order.
  Poly derivative(Direction d) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Same polynomial scaled so the leading coefficient is 1 (zero stays zero).
Poly monic(const Poly& p);

/// Monic greatest common divisor (0 only when both inputs are 0).
Poly gcd(const Poly& a, const Poly& b);

/// gcd of the coefficients of p viewed as a polynomial in `id`.
Poly content_in(const Poly& p, Symbol::Id id);

/// Polynomial substitution of symbols by polynomials.
Poly substitute(const Poly& p, const std::vector<std::pair<Symbol::Id, Poly>>& assignments);

}  // namespace lpdo
