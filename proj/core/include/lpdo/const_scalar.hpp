#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lpdo {

/// An element of a multiquadratic field Q(sqrt(d1), ..., sqrt(dk)).
///
/// The value is stored by its coordinates over the basis {sqrt(m)} with m
/// running over square-free integers; sqrt(m) for negative m stands for
/// i*sqrt(|m|), and m = 1 is the rational part.  Coordinates are sorted by
/// basis key and zero coordinates are never stored, so every value has exactly
/// one representation and equality is structural.
///
/// The tower is implicit: a radical is "adjoined" as soon as some value uses
/// it, and products of radicals are reduced on the fly (sqrt(2)*sqrt(6) =
/// 2*sqrt(3), i*i = -1).
class ConstScalar {
public:
  using Radicand = std::int64_t;

  struct Coord {
    Radicand basis;
    mpq_class value;
  };

  ConstScalar() = default;
  ConstScalar(long value);  // NOLINT(google-explicit-constructor)
  ConstScalar(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  /// sqrt(m) for a square-free integer m (m = -1 gives i).
  static ConstScalar radical(Radicand m);
  static ConstScalar imaginary_unit() { return radical(-1); }

  bool is_zero() const { return coords_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  /// The value as a rational number when no radical is involved.
  std::optional<mpq_class> as_rational() const;
  const std::vector<Coord>& coords() const { return coords_; }

  /// Generators of the smallest subtower containing this value: the primes
  /// dividing some radicand, plus -1 when an imaginary basis element occurs.
  std::vector<Radicand> generators() const;

  /// Applies the automorphism sqrt(g) -> -sqrt(g) for one generator g.
  ConstScalar conjugate(Radicand generator) const;

  /// Throws DivisionByZero on zero.
  ConstScalar inverse() const;

  /// Sign of the first stored coordinate (0 for zero).  Used to pick a
  /// canonical square root.
  int leading_sign() const;

  /// Square root of a rational constant, adjoining sqrt(d) for its
  /// square-free part d.  Values outside Q (and rationals too large to
  /// factor by trial division) return nullopt.
  std::optional<ConstScalar> sqrt() const;

  ConstScalar operator-() const;
  ConstScalar& operator+=(const ConstScalar& other);
  ConstScalar& operator-=(const ConstScalar& other);
  ConstScalar& operator*=(const ConstScalar& other);
  ConstScalar& operator/=(const ConstScalar& other);

  friend ConstScalar operator+(ConstScalar a, const ConstScalar& b) { return a += b; }
  friend ConstScalar operator-(ConstScalar a, const ConstScalar& b) { return a -= b; }
  friend ConstScalar operator*(const ConstScalar& a, const ConstScalar& b);
  friend ConstScalar operator/(const ConstScalar& a, const ConstScalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const ConstScalar& a, const ConstScalar& b);
  friend bool operator!=(const ConstScalar& a, const ConstScalar& b) { return !(a == b); }

  /// Plain text, e.g. "3/2", "-sqrt(2)", "1 + i".
  std::string to_string() const;

private:
  std::vector<Coord> coords_;
};

/// Square-free factorisation helper: returns (s, d) with |n| = s^2 * d and d
/// square-free, or nullopt if n has a prime factor beyond the trial-division
/// bound that is not itself a perfect square cofactor.
std::optional<std::pair<mpz_class, mpz_class>> square_free_split(const mpz_class& n);

/// Positive divisors of a nonzero integer, or nullopt when it cannot be
/// factored by trial division.
std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& n);

}  // namespace lpdo
