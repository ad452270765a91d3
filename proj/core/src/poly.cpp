#include "lpdo/poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lpdo {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(Symbol::Id id, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(id, exponent);
    m.degree_ = exponent;
  }
  return m;
}

std::uint32_t Monomial::exponent(Symbol::Id id) const {
  for (const auto& [v, e] : factors_) {
    if (v == id) return e;
    if (v > id) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.is_one()) return *this;
  if (is_one()) return other;
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  if (other.degree_ > degree_) return std::nullopt;
  Monomial out;
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (j != other.factors_.end()) {
    while (i != factors_.end() && i->first < j->first) out.factors_.push_back(*i++);
    if (i == factors_.end() || i->first != j->first || i->second < j->second) return std::nullopt;
    if (i->second > j->second) out.factors_.emplace_back(i->first, i->second - j->second);
    ++i;
    ++j;
  }
  while (i != factors_.end()) out.factors_.push_back(*i++);
  out.degree_ = degree_ - other.degree_;
  return out;
}

Monomial Monomial::with_exponent(Symbol::Id id, std::uint32_t exponent) const {
  Monomial out;
  bool placed = false;
  for (const auto& [v, e] : factors_) {
    if (!placed && v >= id) {
      placed = true;
      if (exponent > 0) out.factors_.emplace_back(id, exponent);
      if (v == id) continue;
    }
    out.factors_.emplace_back(v, e);
  }
  if (!placed && exponent > 0) out.factors_.emplace_back(id, exponent);
  out.degree_ = 0;
  for (const auto& f : out.factors_) out.degree_ += f.second;
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      const auto e = std::min(i->second, j->second);
      out.factors_.emplace_back(i->first, e);
      out.degree_ += e;
      ++i;
      ++j;
    }
  }
  return out;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second ? -1 : 1;
      ++i;
      ++j;
    } else {
      // The side holding the smaller id has a positive exponent where the
      // other has zero.
      return fa[i].first < fb[j].first ? 1 : -1;
    }
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

// -------------------------------------------------------------------- Poly

namespace {

bool term_before(const Poly::Term& a, const Poly::Term& b) { return compare(a.mono, b.mono) > 0; }

}  // namespace

Poly::Poly(const ConstScalar& c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

Poly Poly::var(Symbol::Id id) { return term(Monomial::var(id), ConstScalar(1)); }

Poly Poly::term(Monomial mono, ConstScalar coeff) {
  Poly p;
  if (!coeff.is_zero()) p.terms_.push_back({std::move(mono), std::move(coeff)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one(); }

ConstScalar Poly::constant_value() const {
  if (terms_.empty() || !terms_.back().mono.is_one()) return {};
  return terms_.back().coeff;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

std::uint32_t Poly::degree_in(Symbol::Id id) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(id));
  return d;
}

std::vector<Symbol::Id> Poly::variables() const {
  std::set<Symbol::Id> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) vars.insert(f.first);
  }
  return {vars.begin(), vars.end()};
}

bool Poly::contains(Symbol::Id id) const {
  for (const auto& t : terms_) {
    if (t.mono.exponent(id) > 0) return true;
  }
  return false;
}

bool Poly::all_coefficients_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_rational(); });
}

std::vector<Poly> Poly::coeffs_in(Symbol::Id id) const {
  std::vector<std::vector<Term>> buckets(degree_in(id) + 1);
  for (const auto& t : terms_) {
    const auto e = t.mono.exponent(id);
    buckets[e].push_back({t.mono.with_exponent(id, 0), t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Removing one variable keeps the relative grlex order only within a
    // fixed exponent, which is what each bucket holds.
    Poly p;
    p.terms_ = std::move(b);
    out.push_back(std::move(p));
  }
  return out;
}

Poly Poly::from_coeffs(Symbol::Id id, const std::vector<Poly>& coeffs) {
  Poly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out += coeffs[k].times_term(Monomial::var(id, static_cast<std::uint32_t>(k)), ConstScalar(1));
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    int c;
    if (i == terms_.end()) {
      c = -1;
    } else if (j == other.terms_.end()) {
      c = 1;
    } else {
      c = compare(i->mono, j->mono);
    }
    if (c > 0) {
      merged.push_back(std::move(*i++));
    } else if (c < 0) {
      merged.push_back(*j++);
    } else {
      ConstScalar sum = i->coeff + j->coeff;
      if (!sum.is_zero()) merged.push_back({std::move(i->mono), std::move(sum)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly Poly::times_term(const Monomial& m, const ConstScalar& c) const {
  if (c.is_zero()) return {};
  Poly out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the term order.
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
  return out;
}

Poly Poly::scaled(const ConstScalar& c) const { return times_term(Monomial(), c); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coeff);
  std::vector<Poly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) products.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  }
  return Poly::from_terms(std::move(products));
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::partial(Symbol::Id id) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.mono.exponent(id);
    if (e == 0) continue;
    out.push_back({t.mono.with_exponent(id, e - 1), t.coeff * ConstScalar(static_cast<long>(e))});
  }
  return from_terms(std::move(out));
}

Poly Poly::derivative(Direction d) const {
  const Symbol::Id coord = d == Direction::X ? Symbol::x : Symbol::y;
  std::vector<Term> out;
  std::map<Symbol::Id, Symbol::Id> shifted;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.mono.factors()) {
      Symbol::Id target;
      if (v == coord) {
        target = v;
      } else if (Symbol::is_coordinate(v)) {
        continue;
      } else if (Symbol::kind(v) == Symbol::Kind::Jet) {
        auto it = shifted.find(v);
        if (it == shifted.end()) {
          const auto [jx, jy] = Symbol::jet_order(v);
          it = shifted.emplace(v, d == Direction::X ? Symbol::jet(jx + 1, jy) : Symbol::jet(jx, jy + 1)).first;
        }
        target = it->second;
      } else {
        continue;
      }
      Monomial m = t.mono.with_exponent(v, e - 1);
      if (target != v) m = m * Monomial::var(target);
      out.push_back({std::move(m), t.coeff * ConstScalar(static_cast<long>(e))});
    }
  }
  return from_terms(std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Poly();
  const auto& lb = b.lead();
  const ConstScalar inv = lb.coeff.inverse();
  if (b.size() == 1) {
    std::vector<Poly::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      auto q = t.mono.divide(lb.mono);
      if (!q) return std::nullopt;
      out.push_back({std::move(*q), t.coeff * inv});
    }
    return Poly::from_terms(std::move(out));
  }
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  std::vector<Poly::Term> quotient;
  Poly rem = a;
  while (!rem.is_zero()) {
    const auto& lr = rem.lead();
    auto q = lr.mono.divide(lb.mono);
    if (!q) return std::nullopt;
    ConstScalar c = lr.coeff * inv;
    rem -= b.times_term(*q, c);
    quotient.push_back({std::move(*q), std::move(c)});
  }
  return Poly::from_terms(std::move(quotient));
}

Poly monic(const Poly& p) {
  if (p.is_zero() || p.lead_coeff().is_one()) return p;
  return p.scaled(p.lead_coeff().inverse());
}

Poly substitute(const Poly& p, const std::vector<std::pair<Symbol::Id, Poly>>& assignments) {
  Poly out;
  std::map<std::pair<Symbol::Id, std::uint32_t>, Poly> powers;
  for (const auto& t : p.terms()) {
    Monomial kept;
    Poly factor(t.coeff);
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = std::find_if(assignments.begin(), assignments.end(),
                             [v = v](const auto& a) { return a.first == v; });
      if (it == assignments.end()) {
        kept = kept * Monomial::var(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pw = powers.find(key);
      if (pw == powers.end()) pw = powers.emplace(key, it->second.pow(e)).first;
      factor = factor * pw->second;
    }
    out += factor.times_term(kept, ConstScalar(1));
  }
  return out;
}

}  // namespace lpdo
