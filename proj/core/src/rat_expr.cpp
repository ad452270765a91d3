#include "lpdo/rat_expr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lpdo/errors.hpp"

namespace lpdo {

namespace {

Poly exact(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("rational function: expected exact division");
  return std::move(*q);
}

}  // namespace

RatExpr::RatExpr(Poly num, Poly den, Coprime) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.lead_coeff().is_one()) {
    const ConstScalar inv = den_.lead_coeff().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatExpr RatExpr::make(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return {};
  if (den.is_constant()) return RatExpr(num.scaled(den.constant_value().inverse()));
  if (auto q = divide_exact(num, den)) return RatExpr(std::move(*q));
  const Poly g = gcd(num, den);
  if (!g.is_constant()) {
    num = exact(num, g);
    den = exact(den, g);
  }
  return {std::move(num), std::move(den), Coprime{}};
}

std::optional<ConstScalar> RatExpr::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_value();
}

bool RatExpr::contains_jets() const {
  for (auto v : variables()) {
    if (Symbol::is_jet(v)) return true;
  }
  return false;
}

std::vector<Symbol::Id> RatExpr::variables() const {
  auto a = num_.variables();
  const auto b = den_.variables();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<ConstScalar::Radicand> RatExpr::radical_generators() const {
  std::set<ConstScalar::Radicand> gens;
  for (const Poly* p : {&num_, &den_}) {
    for (const auto& t : p->terms()) {
      for (auto g : t.coeff.generators()) gens.insert(g);
    }
  }
  return {gens.begin(), gens.end()};
}

std::vector<ConstScalar::Radicand> radical_generators(const std::vector<RatExpr>& values) {
  std::set<ConstScalar::Radicand> gens;
  for (const auto& v : values) {
    for (auto g : v.radical_generators()) gens.insert(g);
  }
  return {gens.begin(), gens.end()};
}

RatExpr RatExpr::operator-() const {
  RatExpr out = *this;
  out.num_ = -out.num_;
  return out;
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatExpr(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatExpr::make(a.num_ + b.num_, a.den_);
  const Poly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatExpr::Coprime{}};
  }
  const Poly ad = exact(a.den_, g);
  const Poly bd = exact(b.den_, g);
  return RatExpr::make(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) { return a + (-b); }

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return RatExpr(a.num_ * b.num_);
  const Poly g1 = b.den_.is_one() ? Poly(1) : gcd(a.num_, b.den_);
  const Poly g2 = a.den_.is_one() ? Poly(1) : gcd(b.num_, a.den_);
  const Poly an = g1.is_one() ? a.num_ : exact(a.num_, g1);
  const Poly bd = g1.is_one() ? b.den_ : exact(b.den_, g1);
  const Poly bn = g2.is_one() ? b.num_ : exact(b.num_, g2);
  const Poly ad = g2.is_one() ? a.den_ : exact(a.den_, g2);
  return {an * bn, ad * bd, RatExpr::Coprime{}};
}

RatExpr RatExpr::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return {den_, num_, Coprime{}};
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) { return a * b.inverse(); }

RatExpr RatExpr::pow(unsigned e) const {
  if (den_.is_one()) return RatExpr(num_.pow(e));
  return {num_.pow(e), den_.pow(e), Coprime{}};
}

RatExpr diff(const RatExpr& a, Direction d) {
  if (a.is_polynomial()) return RatExpr(a.num().derivative(d));
  const Poly dd = a.den().derivative(d);
  if (dd.is_zero()) return RatExpr::make(a.num().derivative(d), a.den());
  // With g = gcd(den, den') the result is (num' e - num den'/g) / (den e),
  // e = den/g. Any factor left in common with the numerator divides den.
  const Poly g = gcd(a.den(), dd);
  const Poly e = g.is_one() ? a.den() : exact(a.den(), g);
  const Poly n = a.num().derivative(d) * e - a.num() * (g.is_one() ? dd : exact(dd, g));
  if (n.is_zero()) return {};
  const Poly den = a.den() * e;
  const Poly h = gcd(n, a.den());
  if (h.is_constant()) return {n, den, RatExpr::Coprime{}};
  return RatExpr::make(exact(n, h), exact(den, h));
}

RatExpr diff(const RatExpr& a, int dx, int dy) {
  RatExpr out = a;
  for (int i = 0; i < dx && !out.is_zero(); ++i) out = diff(out, Direction::X);
  for (int i = 0; i < dy && !out.is_zero(); ++i) out = diff(out, Direction::Y);
  return out;
}

namespace {

RatExpr evaluate(const Poly& p, const Assignment& assignments,
                 std::map<std::pair<Symbol::Id, std::uint32_t>, RatExpr>& powers) {
  RatExpr out;
  for (const auto& t : p.terms()) {
    Monomial kept;
    RatExpr factor(t.coeff);
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = assignments.find(v);
      if (it == assignments.end()) {
        kept = kept * Monomial::var(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pw = powers.find(key);
      if (pw == powers.end()) pw = powers.emplace(key, it->second.pow(e)).first;
      factor = factor * pw->second;
    }
    out = out + factor * RatExpr(Poly::term(kept, ConstScalar(1)));
  }
  return out;
}

}  // namespace

RatExpr substitute(const RatExpr& a, const Assignment& assignments) {
  const bool polynomial = std::all_of(assignments.begin(), assignments.end(),
                                      [](const auto& kv) { return kv.second.is_polynomial(); });
  if (polynomial) {
    std::vector<std::pair<Symbol::Id, Poly>> polys;
    for (const auto& [k, v] : assignments) polys.emplace_back(k, v.num());
    const Poly den = substitute(a.den(), polys);
    if (den.is_zero()) throw SubstitutionError("denominator vanishes after substitution");
    return RatExpr::make(substitute(a.num(), polys), den);
  }
  std::map<std::pair<Symbol::Id, std::uint32_t>, RatExpr> powers;
  const RatExpr den = evaluate(a.den(), assignments, powers);
  if (den.is_zero()) throw SubstitutionError("denominator vanishes after substitution");
  return evaluate(a.num(), assignments, powers) / den;
}

std::optional<Poly> perfect_square_root(const Poly& p) {
  if (p.is_zero()) return Poly();
  const auto& lead = p.lead();
  Monomial half;
  for (const auto& [v, e] : lead.mono.factors()) {
    if (e % 2 != 0) return std::nullopt;
    half = half * Monomial::var(v, e / 2);
  }
  const auto lead_root = lead.coeff.sqrt();
  if (!lead_root) return std::nullopt;
  Poly root = Poly::term(half, *lead_root);
  const ConstScalar twice_lead = *lead_root * ConstScalar(2);
  const ConstScalar inv = twice_lead.inverse();
  Poly rem = p - root * root;
  Monomial last = half;
  // Each step cancels the leading term of the remainder, so the new term is
  // strictly smaller than every earlier one; the loop ends once the
  // remainder vanishes or a term fails to divide.
  while (!rem.is_zero()) {
    auto q = rem.lead().mono.divide(half);
    if (!q || compare(*q, last) >= 0) return std::nullopt;
    const Poly t = Poly::term(*q, rem.lead().coeff * inv);
    rem -= root * t * Poly(2) + t * t;
    root += t;
    last = *q;
  }
  return root;
}

std::optional<RatExpr> perfect_square_root(const RatExpr& a) {
  if (a.is_zero()) return RatExpr();
  auto n = perfect_square_root(a.num());
  if (!n) return std::nullopt;
  auto d = perfect_square_root(a.den());
  if (!d) return std::nullopt;
  return RatExpr::make(std::move(*n), std::move(*d));
}

}  // namespace lpdo
