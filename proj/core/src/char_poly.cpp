#include "lpdo/char_poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lpdo {

namespace {

using UPoly = std::vector<RatExpr>;  // ascending powers

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

RatExpr eval(const UPoly& p, const RatExpr& r) {
  RatExpr acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * r + *it;
  return acc;
}

// Quotient of p by (t - r); r must be a root.
UPoly deflate(const UPoly& p, const RatExpr& r) {
  UPoly q(p.size() - 1);
  RatExpr carry;
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

bool all_constant(const UPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const RatExpr& c) { return c.is_constant(); });
}

std::optional<mpq_class> rational_of(const RatExpr& c) {
  if (!c.is_constant()) return std::nullopt;
  return c.constant_value()->as_rational();
}

// Rational root theorem.  Zero roots must already be removed.
std::optional<RatExpr> rational_root(const UPoly& p) {
  std::vector<mpq_class> q;
  for (const auto& c : p) {
    auto r = rational_of(c);
    if (!r) return std::nullopt;
    q.push_back(*r);
  }
  mpz_class l = 1;
  for (const auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : q) z.emplace_back(mpq_class(c * l).get_num());
  const auto ps = positive_divisors(z.front());
  const auto qs = positive_divisors(z.back());
  if (!ps || !qs) return std::nullopt;
  std::set<mpq_class> seen;
  for (const auto& a : *ps) {
    for (const auto& b : *qs) {
      mpq_class cand(a, b);
      cand.canonicalize();
      if (!seen.insert(cand).second) continue;
      for (const mpq_class& c : {cand, mpq_class(-cand)}) {
        mpq_class acc = 0;
        for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * c + *it;
        if (acc == 0) return RatExpr(c);
      }
    }
  }
  return std::nullopt;
}

Poly lcm(const Poly& a, const Poly& b) {
  const Poly g = gcd(a, b);
  return *divide_exact(a * b, g);
}

std::vector<Poly> clear_denominators(const UPoly& p) {
  Poly d(1);
  for (const auto& c : p) {
    if (!c.is_polynomial()) d = lcm(d, c.den());
  }
  std::vector<Poly> out;
  for (const auto& c : p) out.push_back((c * RatExpr(d)).num());
  return out;
}

Monomial monomial_content(const Poly& p) {
  Monomial g = p.lead().mono;
  for (const auto& t : p.terms()) g = Monomial::gcd(g, t.mono);
  return g;
}

// Cheap partial factorisation into monic pieces: monomial content,
// recursive contents, and square-free splitting.  Not every piece is
// irreducible.
void split_factors(const Poly& p0, std::vector<Poly>& atoms, int depth = 0) {
  if (p0.is_zero() || p0.is_constant()) return;
  Poly p = monic(p0);
  const Monomial m = monomial_content(p);
  if (!m.is_one()) {
    for (const auto& [v, e] : m.factors()) {
      for (std::uint32_t i = 0; i < e; ++i) atoms.push_back(Poly::var(v));
    }
    p = *divide_exact(p, Poly::term(m, ConstScalar(1)));
    if (p.is_constant()) return;
  }
  if (depth > 8 || p.size() == 1) {
    atoms.push_back(p);
    return;
  }
  for (auto v : p.variables()) {
    const Poly c = content_in(p, v);
    if (!c.is_constant()) {
      split_factors(c, atoms, depth + 1);
      split_factors(*divide_exact(p, c), atoms, depth + 1);
      return;
    }
  }
  const auto vars = p.variables();
  const Poly g = gcd(p, p.partial(vars.front()));
  if (!g.is_constant()) {
    split_factors(g, atoms, depth + 1);
    split_factors(*divide_exact(p, g), atoms, depth + 1);
    return;
  }
  atoms.push_back(p);
}

std::vector<Poly> divisors(const Poly& p, std::size_t cap) {
  std::vector<Poly> atoms;
  split_factors(p, atoms);
  std::vector<std::pair<Poly, int>> grouped;
  for (const auto& a : atoms) {
    auto it = std::find_if(grouped.begin(), grouped.end(), [&](const auto& g) { return g.first == a; });
    if (it == grouped.end()) {
      grouped.emplace_back(a, 1);
    } else {
      ++it->second;
    }
  }
  std::vector<Poly> out{Poly(1)};
  for (const auto& [a, count] : grouped) {
    const std::size_t before = out.size();
    Poly power(1);
    for (int e = 1; e <= count; ++e) {
      power = power * a;
      for (std::size_t i = 0; i < before && out.size() < cap; ++i) out.push_back(out[i] * power);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Poly& a, const Poly& b) { return a.total_degree() < b.total_degree(); });
  return out;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

// Constants c with p(c * s) = 0.
std::optional<RatExpr> scaled_root(const UPoly& p, const RatExpr& s) {
  UPoly e;
  RatExpr power(1);
  for (const auto& c : p) {
    e.push_back(c * power);
    power = power * s;
  }
  const RatExpr lead = e.back();
  for (auto& c : e) c = c / lead;
  if (all_constant(e)) {
    std::vector<std::pair<RatExpr, int>> roots = univariate_roots(e);
    for (const auto& [c, m] : roots) {
      if (!c.is_zero()) return c * s;
    }
    return std::nullopt;
  }
  // c must be a common root of the constant polynomials obtained by
  // collecting each monomial of the cleared numerators.
  const auto cleared = clear_denominators(e);
  std::map<Monomial, UPoly, MonomialLess> groups;
  for (std::size_t k = 0; k < cleared.size(); ++k) {
    for (const auto& t : cleared[k].terms()) {
      auto& g = groups[t.mono];
      if (g.size() <= k) g.resize(k + 1);
      g[k] = RatExpr(t.coeff);
    }
  }
  const UPoly* best = nullptr;
  for (auto& [m, g] : groups) {
    trim(g);
    if (deg(g) < 1) {
      if (!g.empty()) return std::nullopt;  // nonzero constant: no common root
      continue;
    }
    if (best == nullptr || deg(g) < deg(*best)) best = &g;
  }
  if (best == nullptr) return std::nullopt;
  for (const auto& [c, m] : univariate_roots(*best)) {
    if (c.is_zero()) continue;
    const RatExpr r = c * s;
    if (eval(p, r).is_zero()) return r;
  }
  return std::nullopt;
}

std::optional<RatExpr> function_root(const UPoly& p) {
  const auto q = clear_denominators(p);
  constexpr std::size_t kCap = 48;
  const auto us = divisors(q.front(), kCap);
  const auto vs = divisors(q.back(), kCap);
  std::size_t tried = 0;
  for (const auto& u : us) {
    for (const auto& v : vs) {
      if (++tried > 600) return std::nullopt;
      if (auto r = scaled_root(p, RatExpr::make(u, v))) return r;
    }
  }
  return std::nullopt;
}

std::optional<RatExpr> find_one_root(const UPoly& p) {
  if (all_constant(p)) return rational_root(p);
  return function_root(p);
}

void add_root(std::vector<std::pair<RatExpr, int>>& roots, const RatExpr& r, int m) {
  for (auto& [v, count] : roots) {
    if (v == r) {
      count += m;
      return;
    }
  }
  roots.emplace_back(r, m);
}

}  // namespace

std::vector<std::pair<RatExpr, int>> univariate_roots(UPoly p, UPoly* unresolved) {
  trim(p);
  if (p.empty()) throw std::invalid_argument("zero polynomial has no finite root set");
  std::vector<std::pair<RatExpr, int>> roots;
  int zeros = 0;
  while (p.front().is_zero()) {
    p.erase(p.begin());
    ++zeros;
  }
  if (zeros > 0) add_root(roots, RatExpr(), zeros);
  while (deg(p) >= 1) {
    if (deg(p) == 1) {
      add_root(roots, -p[0] / p[1], 1);
      p = {p[1]};
      break;
    }
    if (deg(p) == 2) {
      const RatExpr& a = p[2];
      const RatExpr& b = p[1];
      const RatExpr& c = p[0];
      const RatExpr disc = b * b - RatExpr(4) * a * c;
      if (disc.is_zero()) {
        add_root(roots, -b / (RatExpr(2) * a), 2);
        p = {a};
        break;
      }
      if (auto s = perfect_square_root(disc)) {
        add_root(roots, (-b + *s) / (RatExpr(2) * a), 1);
        add_root(roots, (-b - *s) / (RatExpr(2) * a), 1);
        p = {a};
      }
      break;
    }
    auto r = find_one_root(p);
    if (!r) break;
    int m = 0;
    while (deg(p) >= 1 && eval(p, *r).is_zero()) {
      p = deflate(p, *r);
      ++m;
    }
    add_root(roots, *r, m);
  }
  if (unresolved != nullptr) {
    if (deg(p) >= 1) {
      *unresolved = p;
    } else {
      unresolved->clear();
    }
  }
  return roots;
}

int CharPoly::degree() const {
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) return n - static_cast<int>(k);
  }
  return -1;
}

RatExpr CharPoly::operator()(const RatExpr& w) const {
  RatExpr acc;
  for (const auto& c : coeffs) acc = acc * w + c;
  return acc;
}

CharPoly CharPoly::derivative() const {
  CharPoly out;
  out.n = n - 1;
  for (int k = 0; k < n; ++k) out.coeffs.push_back(coeffs[static_cast<std::size_t>(k)] * RatExpr(n - k));
  return out;
}

std::vector<RatExpr> CharPoly::ascending() const {
  UPoly out(coeffs.rbegin(), coeffs.rend());
  trim(out);
  return out;
}

std::string CharPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const RatExpr& c = coeffs[k];
    if (c.is_zero()) continue;
    const int power = n - static_cast<int>(k);
    std::string cs = c.to_string();
    bool negative = false;
    if (c.num().size() == 1 && cs.front() == '-') {
      negative = true;
      cs = (-c).to_string();
    }
    std::string term;
    if (power == 0) {
      term = cs;
    } else {
      const std::string w = power == 1 ? "w" : "w^" + std::to_string(power);
      if (cs == "1") {
        term = w;
      } else {
        const bool wrap = cs.find_first_of(" /") != std::string::npos;
        term = (wrap ? "(" + cs + ")" : cs) + "*" + w;
      }
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

CharPoly char_poly(const LPDO& a) {
  const int n = a.order();
  if (n < 1) throw std::invalid_argument("characteristic polynomial needs order >= 1");
  return {n, a.homogeneous_part(n)};
}

int root_multiplicity(const CharPoly& p, const RatExpr& w) {
  int m = 0;
  CharPoly q = p;
  while (q.degree() >= 0 && q(w).is_zero()) {
    ++m;
    q = q.derivative();
  }
  return m;
}

int RootSet::total_multiplicity() const {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

RootSet find_roots(const CharPoly& p) {
  const UPoly asc = p.ascending();
  if (asc.empty()) throw std::invalid_argument("characteristic polynomial is identically zero");
  RootSet out;
  const auto base = radical_generators(p.coeffs);
  for (const auto& [value, m] : univariate_roots(asc, &out.unresolved)) {
    Root r;
    r.value = value;
    r.multiplicity = root_multiplicity(p, value);
    for (auto g : value.radical_generators()) {
      if (!std::binary_search(base.begin(), base.end(), g)) r.extension_used.push_back(g);
    }
    out.roots.push_back(std::move(r));
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Root& a, const Root& b) { return a.value.to_string() < b.value.to_string(); });
  const int d = p.degree();
  if (d < p.n) {
    Root inf;
    inf.at_infinity = true;
    inf.multiplicity = p.n - d;
    out.roots.push_back(std::move(inf));
  }
  return out;
}

}  // namespace lpdo
