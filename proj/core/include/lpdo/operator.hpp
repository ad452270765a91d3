#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "lpdo/const_scalar.hpp"
#include "lpdo/rat_expr.hpp"

namespace lpdo {

/// Derivative multi-index (j, k) for d^j/dx^j d^k/dy^k.
struct DerivIndex {
  int j = 0;
  int k = 0;

  int order() const { return j + k; }
  friend bool operator==(DerivIndex a, DerivIndex b) { return a.j == b.j && a.k == b.k; }
  friend bool operator!=(DerivIndex a, DerivIndex b) { return !(a == b); }
};

/// Print order: total order descending, then x-order descending.
struct DerivIndexOrder {
  bool operator()(DerivIndex a, DerivIndex b) const {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.j > b.j;
  }
};

/// Linear partial differential operator sum a_jk Dx^j Dy^k with
/// coefficients to the left of the derivatives.  Zero coefficients are never
/// stored.
class LPDO {
public:
  using Coeffs = std::map<DerivIndex, RatExpr, DerivIndexOrder>;

  LPDO() = default;
  LPDO(const RatExpr& c);  // NOLINT(google-explicit-constructor)
  LPDO(long c) : LPDO(RatExpr(c)) {}  // NOLINT(google-explicit-constructor)
  static LPDO dx() { return derivative(1, 0); }
  static LPDO dy() { return derivative(0, 1); }
  static LPDO derivative(int j, int k);
  static LPDO from_coeffs(const Coeffs& coeffs);

  const Coeffs& coeffs() const { return coeffs_; }
  /// Highest j + k with a nonzero coefficient; -1 for the zero operator.
  int order() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first.order(); }
  bool is_zero() const { return coeffs_.empty(); }
  RatExpr coeff(int j, int k) const;
  void set(int j, int k, const RatExpr& value);
  /// Coefficients a_{m-k,k} for k = 0..m.
  std::vector<RatExpr> homogeneous_part(int m) const;

  LPDO operator-() const;
  LPDO& operator+=(const LPDO& other);
  LPDO& operator-=(const LPDO& other);
  friend LPDO operator+(LPDO a, const LPDO& b) { return a += b; }
  friend LPDO operator-(LPDO a, const LPDO& b) { return a -= b; }
  /// Left multiplication by a function.
  friend LPDO operator*(const RatExpr& f, const LPDO& a);

  friend bool operator==(const LPDO& a, const LPDO& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const LPDO& a, const LPDO& b) { return !(a == b); }

private:
  Coeffs coeffs_;
};

/// Normal form of a o b (Leibniz rule).
LPDO compose(const LPDO& a, const LPDO& b);
LPDO compose(const std::vector<LPDO>& factors);

/// Formal transpose sum (-1)^(j+k) Dx^j Dy^k o a_jk.
LPDO transpose(const LPDO& a);

/// sum a_jk d^j/dx^j d^k/dy^k f.
RatExpr apply(const LPDO& a, const RatExpr& f);

/// Constant 2x2 matrix; (u, v) = M (x, y).
class ConstMatrix {
public:
  ConstMatrix() : ConstMatrix(1, 0, 0, 1) {}
  ConstMatrix(ConstScalar m00, ConstScalar m01, ConstScalar m10, ConstScalar m11)
      : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {}

  static ConstMatrix identity() { return {}; }
  static ConstMatrix swap() { return {0, 1, 1, 0}; }
  /// u = x + c y, v = y.
  static ConstMatrix shear(const ConstScalar& c) { return {1, c, 0, 1}; }

  const ConstScalar& operator()(int r, int c) const { return m_[static_cast<std::size_t>(2 * r + c)]; }
  ConstScalar det() const;
  /// Throws SingularMatrix.
  ConstMatrix inverse() const;
  bool is_identity() const { return *this == identity(); }

  friend ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b);
  friend bool operator==(const ConstMatrix& a, const ConstMatrix& b) { return a.m_ == b.m_; }
  friend bool operator!=(const ConstMatrix& a, const ConstMatrix& b) { return !(a == b); }

private:
  std::array<ConstScalar, 4> m_;
};

/// Rewrites the operator in the variables (u, v) = M (x, y) and then names
/// them x, y again.  Throws SingularMatrix.
LPDO change_vars(const LPDO& a, const ConstMatrix& m);
/// The same change applied to a function; jet symbols follow the chain rule.
RatExpr change_vars(const RatExpr& f, const ConstMatrix& m);

/// p1 Dx + p2 Dy + p3.
struct FirstOrderFactor {
  RatExpr p1;
  RatExpr p2;
  RatExpr p3;

  LPDO to_operator() const;
  /// Reads the coefficients of an operator of order at most one.
  static FirstOrderFactor from_operator(const LPDO& a);

  bool is_normalized() const {
    return p1.is_one() || (p1.is_zero() && p2.is_one());
  }

  friend bool operator==(const FirstOrderFactor& a, const FirstOrderFactor& b) {
    return a.p1 == b.p1 && a.p2 == b.p2 && a.p3 == b.p3;
  }
};

/// Rescales a factorization F o B into F' o B' with F' normalized (p1 = 1,
/// or p1 = 0 and p2 = 1): F' = F o (1/g), B' = g B with g the first nonzero
/// of p1, p2.
void normalize(FirstOrderFactor& factor, LPDO& cofactor);

}  // namespace lpdo
