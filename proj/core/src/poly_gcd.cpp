// Multivariate gcd by recursive content/primitive-part splitting with a
// subresultant remainder sequence in one variable at a time.

#include <algorithm>
#include <stdexcept>

#include "lpdo/poly.hpp"

namespace lpdo {

namespace {

// Polynomial in one distinguished variable with Poly coefficients,
// ascending by degree and trimmed (no trailing zero coefficients).
using UPoly = std::vector<Poly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Poly exact(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return std::move(*q);
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
UPoly prem(UPoly a, const UPoly& b) {
  const int db = deg(b);
  const Poly& lb = b.back();
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    const Poly la = a.back();
    const int shift = deg(a) - db;
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
    trim(a);
    --e;
  }
  if (e > 0) {
    const Poly scale = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * scale;
  }
  return a;
}

Poly upoly_content(const UPoly& p) {
  Poly g;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

UPoly primitive_part(UPoly p) {
  const Poly c = upoly_content(p);
  if (!c.is_one()) {
    for (auto& x : p) x = exact(x, c);
  }
  return p;
}

UPoly to_upoly(const Poly& p, Symbol::Id v) {
  UPoly u = p.coeffs_in(v);
  trim(u);
  return u;
}

// gcd of two polynomials that are primitive in v and have positive degree
// in v.
Poly subresultant_gcd(const Poly& pa, const Poly& pb, Symbol::Id v) {
  UPoly a = to_upoly(pa, v);
  UPoly b = to_upoly(pb, v);
  if (deg(a) < deg(b)) std::swap(a, b);
  Poly g(1);
  Poly h(1);
  for (;;) {
    const int delta = deg(a) - deg(b);
    UPoly r = prem(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) return Poly(1);
    const Poly divisor = g * h.pow(static_cast<unsigned>(delta));
    a = std::move(b);
    for (auto& c : r) c = exact(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  return Poly::from_coeffs(v, primitive_part(b));
}

Poly monomial_gcd_with(const Monomial& m, const Poly& p) {
  Monomial g = m;
  for (const auto& t : p.terms()) {
    g = Monomial::gcd(g, t.mono);
    if (g.is_one()) break;
  }
  return Poly::term(g, ConstScalar(1));
}

}  // namespace

Poly content_in(const Poly& p, Symbol::Id id) {
  Poly g;
  for (const auto& c : p.coeffs_in(id)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.size() == 1) return monomial_gcd_with(a.lead().mono, b);
  if (b.size() == 1) return monomial_gcd_with(b.lead().mono, a);
  if (a.size() <= b.size()) {
    if (divide_exact(b, a)) return monic(a);
  } else if (divide_exact(a, b)) {
    return monic(b);
  }

  const auto va = a.variables();
  const auto vb = b.variables();
  // A variable present in only one argument cannot occur in the gcd.
  for (auto v : va) {
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd(content_in(a, v), b);
  }
  for (auto v : vb) {
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd(a, content_in(b, v));
  }

  // Main variable: the shared one of lowest degree keeps the remainder
  // sequence short.
  Symbol::Id main = va.front();
  std::uint32_t best = UINT32_MAX;
  for (auto v : va) {
    const auto d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }
  const Poly ca = content_in(a, main);
  const Poly cb = content_in(b, main);
  const Poly pa = ca.is_one() ? a : exact(a, ca);
  const Poly pb = cb.is_one() ? b : exact(b, cb);
  const Poly content_gcd = gcd(ca, cb);
  const Poly prim_gcd = subresultant_gcd(pa, pb, main);
  return monic(content_gcd * prim_gcd);
}

}  // namespace lpdo
