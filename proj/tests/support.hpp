#pragma once

#include <random>
#include <vector>

#include "lpdo/factorization.hpp"
#include "lpdo/operator.hpp"
#include "lpdo/rat_expr.hpp"

namespace lpdo::testing {

/// Deterministic generators for property tests.
class Gen {
public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  mpq_class rational(int range = 5, int max_den = 4) {
    mpq_class q(integer(-range, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  mpq_class nonzero_rational(int range = 5, int max_den = 4) {
    mpq_class q;
    do {
      q = rational(range, max_den);
    } while (q == 0);
    return q;
  }

  /// Element of Q(sqrt(2), i).
  ConstScalar scalar() {
    ConstScalar c = rational();
    if (coin()) c += ConstScalar(rational()) * ConstScalar::radical(2);
    if (integer(0, 3) == 0) c += ConstScalar(rational()) * ConstScalar::imaginary_unit();
    return c;
  }

  /// Polynomial in x and y of total degree <= deg with up to `terms` terms;
  /// extra symbols join with small exponents.
  Poly poly(int deg, int terms = 4, const std::vector<Symbol::Id>& extra = {}) {
    std::vector<Poly::Term> out;
    for (int t = 0; t < terms; ++t) {
      const int a = integer(0, deg);
      const int b = integer(0, deg - a);
      Monomial m = Monomial::var(Symbol::x, static_cast<std::uint32_t>(a)) *
                   Monomial::var(Symbol::y, static_cast<std::uint32_t>(b));
      for (auto id : extra) {
        if (integer(0, 2) == 0) m = m * Monomial::var(id, 1);
      }
      out.push_back({m, ConstScalar(rational())});
    }
    return Poly::from_terms(std::move(out));
  }

  Poly nonzero_poly(int deg, int terms = 4, const std::vector<Symbol::Id>& extra = {}) {
    Poly p;
    do {
      p = poly(deg, terms, extra);
    } while (p.is_zero());
    return p;
  }

  /// Polynomial or a quotient with a small denominator.
  RatExpr rat(int deg = 2, const std::vector<Symbol::Id>& extra = {}) {
    const Poly num = poly(deg, 3, extra);
    if (integer(0, 2) != 0) return RatExpr(num);
    return RatExpr::make(num, nonzero_poly(1, 2, extra));
  }

  RatExpr nonzero_rat(int deg = 2, const std::vector<Symbol::Id>& extra = {}) {
    RatExpr r;
    do {
      r = rat(deg, extra);
    } while (r.is_zero());
    return r;
  }

  /// Operator of order exactly n with polynomial coefficients of degree
  /// <= deg.
  LPDO operator_of_order(int n, int deg, int density = 2) {
    LPDO::Coeffs cs;
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= m; ++k) {
        if (m < n && integer(0, density) == 0) continue;
        const Poly p = poly(deg, 3);
        if (!p.is_zero()) cs[{m - k, k}] = RatExpr(p);
      }
    }
    if (cs.empty() || cs.begin()->first.order() != n) cs[{n, 0}] = RatExpr(1);
    return LPDO::from_coeffs(cs);
  }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

}  // namespace lpdo::testing
