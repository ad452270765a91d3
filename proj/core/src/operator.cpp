#include "lpdo/operator.hpp"

#include <stdexcept>

#include "lpdo/errors.hpp"

namespace lpdo {

namespace {

long binom(int n, int r) {
  long out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

void accumulate(LPDO::Coeffs& acc, DerivIndex idx, const RatExpr& value) {
  if (value.is_zero()) return;
  auto it = acc.find(idx);
  if (it == acc.end()) {
    acc.emplace(idx, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) acc.erase(it);
}

// Lazily computed mixed partial derivatives of one function.
class DerivativeTable {
public:
  explicit DerivativeTable(const RatExpr& f) { table_.emplace(DerivIndex{0, 0}, f); }

  const RatExpr& get(int r, int s) {
    const DerivIndex idx{r, s};
    auto it = table_.find(idx);
    if (it != table_.end()) return it->second;
    RatExpr value = s > 0 ? diff(get(r, s - 1), Direction::Y) : diff(get(r - 1, 0), Direction::X);
    return table_.emplace(idx, std::move(value)).first->second;
  }

private:
  std::map<DerivIndex, RatExpr, DerivIndexOrder> table_;
};

// (a Dx + b Dy)^e as a map (p, q) -> coefficient of Dx^p Dy^q.
using ConstSymbol = std::map<std::pair<int, int>, ConstScalar>;

ConstSymbol times(const ConstSymbol& s, const ConstScalar& a, const ConstScalar& b) {
  ConstSymbol out;
  for (const auto& [pq, c] : s) {
    if (!a.is_zero()) out[{pq.first + 1, pq.second}] += c * a;
    if (!b.is_zero()) out[{pq.first, pq.second + 1}] += c * b;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Symbol of Dx^j Dy^k after the change of variables.
ConstSymbol transformed_derivative(const ConstMatrix& m, int j, int k) {
  ConstSymbol s{{{0, 0}, ConstScalar(1)}};
  for (int i = 0; i < j; ++i) s = times(s, m(0, 0), m(1, 0));
  for (int i = 0; i < k; ++i) s = times(s, m(0, 1), m(1, 1));
  return s;
}

}  // namespace

LPDO::LPDO(const RatExpr& c) {
  if (!c.is_zero()) coeffs_.emplace(DerivIndex{0, 0}, c);
}

LPDO LPDO::derivative(int j, int k) {
  LPDO out;
  out.coeffs_.emplace(DerivIndex{j, k}, RatExpr(1));
  return out;
}

LPDO LPDO::from_coeffs(const Coeffs& coeffs) {
  LPDO out;
  for (const auto& [idx, c] : coeffs) out.set(idx.j, idx.k, c);
  return out;
}

RatExpr LPDO::coeff(int j, int k) const {
  auto it = coeffs_.find(DerivIndex{j, k});
  return it == coeffs_.end() ? RatExpr() : it->second;
}

void LPDO::set(int j, int k, const RatExpr& value) {
  if (j < 0 || k < 0) throw std::invalid_argument("negative derivative order");
  if (value.is_zero()) {
    coeffs_.erase(DerivIndex{j, k});
  } else {
    coeffs_[DerivIndex{j, k}] = value;
  }
}

std::vector<RatExpr> LPDO::homogeneous_part(int m) const {
  std::vector<RatExpr> out;
  out.reserve(static_cast<std::size_t>(m + 1));
  for (int k = 0; k <= m; ++k) out.push_back(coeff(m - k, k));
  return out;
}

LPDO LPDO::operator-() const {
  LPDO out = *this;
  for (auto& [idx, c] : out.coeffs_) c = -c;
  return out;
}

LPDO& LPDO::operator+=(const LPDO& other) {
  for (const auto& [idx, c] : other.coeffs_) accumulate(coeffs_, idx, c);
  return *this;
}

LPDO& LPDO::operator-=(const LPDO& other) {
  for (const auto& [idx, c] : other.coeffs_) accumulate(coeffs_, idx, -c);
  return *this;
}

LPDO operator*(const RatExpr& f, const LPDO& a) {
  LPDO out;
  if (f.is_zero()) return out;
  for (const auto& [idx, c] : a.coeffs_) out.coeffs_.emplace(idx, f * c);
  return out;
}

LPDO compose(const LPDO& a, const LPDO& b) {
  LPDO::Coeffs acc;
  for (const auto& [bi, bc] : b.coeffs()) {
    DerivativeTable d(bc);
    for (const auto& [ai, ac] : a.coeffs()) {
      for (int r = 0; r <= ai.j; ++r) {
        for (int s = 0; s <= ai.k; ++s) {
          const RatExpr& db = d.get(r, s);
          if (db.is_zero()) continue;
          const long c = binom(ai.j, r) * binom(ai.k, s);
          accumulate(acc, DerivIndex{ai.j - r + bi.j, ai.k - s + bi.k}, ac * db * RatExpr(c));
        }
      }
    }
  }
  return LPDO::from_coeffs(acc);
}

LPDO compose(const std::vector<LPDO>& factors) {
  if (factors.empty()) return LPDO(1);
  LPDO out = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) out = compose(*it, out);
  return out;
}

LPDO transpose(const LPDO& a) {
  LPDO::Coeffs acc;
  for (const auto& [idx, c] : a.coeffs()) {
    DerivativeTable d(c);
    const long sign = idx.order() % 2 == 0 ? 1 : -1;
    for (int r = 0; r <= idx.j; ++r) {
      for (int s = 0; s <= idx.k; ++s) {
        const RatExpr& dc = d.get(r, s);
        if (dc.is_zero()) continue;
        accumulate(acc, DerivIndex{idx.j - r, idx.k - s},
                   dc * RatExpr(sign * binom(idx.j, r) * binom(idx.k, s)));
      }
    }
  }
  return LPDO::from_coeffs(acc);
}

RatExpr apply(const LPDO& a, const RatExpr& f) {
  DerivativeTable d(f);
  RatExpr out;
  for (const auto& [idx, c] : a.coeffs()) {
    const RatExpr& df = d.get(idx.j, idx.k);
    if (!df.is_zero()) out += c * df;
  }
  return out;
}

ConstScalar ConstMatrix::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

ConstMatrix ConstMatrix::inverse() const {
  const ConstScalar d = det();
  if (d.is_zero()) throw SingularMatrix();
  const ConstScalar inv = d.inverse();
  return {m_[3] * inv, -m_[1] * inv, -m_[2] * inv, m_[0] * inv};
}

ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

RatExpr change_vars(const RatExpr& f, const ConstMatrix& m) {
  const ConstMatrix inv = m.inverse();
  const Poly x = Poly::var(Symbol::x);
  const Poly y = Poly::var(Symbol::y);
  Assignment assignment;
  assignment[Symbol::x] = RatExpr(x.scaled(inv(0, 0)) + y.scaled(inv(0, 1)));
  assignment[Symbol::y] = RatExpr(x.scaled(inv(1, 0)) + y.scaled(inv(1, 1)));
  for (auto id : f.variables()) {
    if (!Symbol::is_jet(id)) continue;
    const auto [a, b] = Symbol::jet_order(id);
    Poly image;
    for (const auto& [pq, c] : transformed_derivative(m, a, b)) {
      image += Poly::var(Symbol::jet(pq.first, pq.second)).scaled(c);
    }
    assignment[id] = RatExpr(image);
  }
  return substitute(f, assignment);
}

LPDO change_vars(const LPDO& a, const ConstMatrix& m) {
  if (m.det().is_zero()) throw SingularMatrix();
  LPDO::Coeffs acc;
  for (const auto& [idx, c] : a.coeffs()) {
    const RatExpr moved = change_vars(c, m);
    for (const auto& [pq, s] : transformed_derivative(m, idx.j, idx.k)) {
      accumulate(acc, DerivIndex{pq.first, pq.second}, moved * RatExpr(s));
    }
  }
  return LPDO::from_coeffs(acc);
}

LPDO FirstOrderFactor::to_operator() const {
  LPDO out;
  out.set(1, 0, p1);
  out.set(0, 1, p2);
  out.set(0, 0, p3);
  return out;
}

FirstOrderFactor FirstOrderFactor::from_operator(const LPDO& a) {
  if (a.order() > 1) throw std::invalid_argument("operator is not of first order");
  return {a.coeff(1, 0), a.coeff(0, 1), a.coeff(0, 0)};
}

void normalize(FirstOrderFactor& factor, LPDO& cofactor) {
  const RatExpr g = !factor.p1.is_zero() ? factor.p1 : factor.p2;
  if (g.is_zero()) throw std::invalid_argument("first-order factor has no derivative part");
  if (g.is_one()) return;
  factor = FirstOrderFactor::from_operator(compose(factor.to_operator(), LPDO(g.inverse())));
  cofactor = g * cofactor;
}

}  // namespace lpdo
