// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "lpdo/char_poly.hpp"
#include "lpdo/factorization.hpp"
#include "lpdo/parser.hpp"
#include "support.hpp"

namespace {

using namespace lpdo;
using lpdo::testing::Gen;

const RatExpr X = RatExpr::x();
const RatExpr Y = RatExpr::y();
const LPDO Dx = LPDO::dx();
const LPDO Dy = LPDO::dy();
const LPDO Dxx = LPDO::derivative(2, 0);
const LPDO Dyy = LPDO::derivative(0, 2);
const LPDO Dxy = LPDO::derivative(1, 1);

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

RatExpr half(const RatExpr& a) { return a / RatExpr(2); }

FactorOptions at(const RatExpr& w) {
  FactorOptions o;
  o.root = RootChoice::with_value(w);
  return o;
}

bool unit_multiple(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return (a / b).is_constant();
}

std::string landau() {
  const LPDO one = Dx + LPDO(1);
  const LPDO lhs = compose({one, one, Dx + X * Dy});
  const LPDO rhs = compose(Dxx + X * Dxy + Dx + (RatExpr(2) + X) * Dy, one);
  require(lhs == rhs, "compositions differ");
  return "canonical forms equal";
}

LPDO poisson(const RatExpr& al, const RatExpr& be, const RatExpr& ga) {
  const RatExpr s = X + Y;
  return Dxy + (al / s) * Dx + (be / s) * Dy + LPDO(ga / (s * s));
}

std::string poisson_check() {
  const RatExpr al = RatExpr::parameter("alpha");
  const RatExpr be = RatExpr::parameter("beta");
  const RatExpr ga = RatExpr::parameter("gamma");
  const auto attempts = factor_left_all(poisson(al, be, ga));
  require(attempts.size() == 2, "expected two root branches");
  const RatExpr c1 = ga - al * (be - 1);
  const RatExpr c2 = ga - be * (al - 1);
  for (const auto& o : attempts) require(o.residuals.size() == 1, "expected one residual per branch");
  const RatExpr r0(attempts[0].residuals[0].num());
  const RatExpr r1(attempts[1].residuals[0].num());
  require((unit_multiple(r0, c1) && unit_multiple(r1, c2)) || (unit_multiple(r0, c2) && unit_multiple(r1, c1)),
          "residual numerators are not unit multiples of the conditions");

  const LPDO first = poisson(al, be, al * (be - 1));
  const auto f = factor_left(first);
  require(f.factored(), "gamma = alpha(beta-1) does not factor");
  require(f.factor.to_operator() == Dx + LPDO(be / (X + Y)) && f.cofactor == Dy + LPDO(al / (X + Y)),
          "wrong factors for gamma = alpha(beta-1)");

  const LPDO second = poisson(al, be, be * (al - 1));
  FactorOptions inf;
  inf.root = RootChoice::infinity();
  const auto s = factor_left(second, inf);
  require(s.factored(), "gamma = beta(alpha-1) does not factor");
  require(s.factor.to_operator() == Dy + LPDO(al / (X + Y)) && s.cofactor == Dx + LPDO(be / (X + Y)),
          "wrong factors for gamma = beta(alpha-1)");
  return "both branches and both specializations";
}

LPDO a_family(const RatExpr& a) {
  return Dxx - Dyy + X * Dy + Y * Dx + LPDO((Y * Y - X * X) / RatExpr(4) + a);
}

std::string a_family_check() {
  const RatExpr a = RatExpr::parameter("a");
  const auto minus = factor_left(a_family(a), at(-1));
  const auto plus = factor_left(a_family(a), at(1));
  require(minus.residuals == std::vector<RatExpr>{a - 1}, "residual at root -1 is not a - 1");
  require(plus.residuals == std::vector<RatExpr>{a + 1}, "residual at root 1 is not a + 1");

  // The factorizations as typed from their printed form.
  const LPDO pm_left = parse_operator("Dx+Dy+(y-x)/2");
  const LPDO pm_right = parse_operator("Dx-Dy+(y+x)/2");
  const auto one = factor_left(a_family(1));
  require(one.factored() && one.factor.to_operator() == pm_left && one.cofactor == pm_right, "A_1 factors differ");

  const auto minus_one = factor_left(a_family(-1));
  require(minus_one.factored() && minus_one.factor.to_operator() == pm_right && minus_one.cofactor == pm_left,
          "A_-1 factors differ");

  const auto right = factor_right(a_family(1));
  require(right.factored() && right.factor.to_operator() == pm_right, "right factor of A_1 differs");
  require(verify(right, a_family(1)).is_zero(), "right factorization does not verify");
  return "residuals a-1, a+1; A_1, A_-1 and the right factor";
}

std::string hyperbolic_check() {
  std::vector<RatExpr> c;
  for (int i = 0; i < 6; ++i) c.push_back(RatExpr::parameter("c" + std::to_string(i)));
  // Generic linear coefficients with symbolic entries, plus a quadratic one.
  const std::vector<std::pair<RatExpr, RatExpr>> cases = {
      {c[0] + c[1] * X + c[2] * Y, c[3] + c[4] * X + c[5] * Y},
      {c[0] * X * Y + c[1], c[2] * X * X + c[3] * Y},
  };
  for (const auto& [a10, a01] : cases) {
    const RatExpr a00 =
        (RatExpr(2) * (diff(a10 + a01, Direction::X) + diff(a10 + a01, Direction::Y)) + a10 * a10 - a01 * a01) /
        RatExpr(4);
    const LPDO op = Dxx - Dyy + a10 * Dx + a01 * Dy + LPDO(a00);
    const auto o = factor_left(op, at(-1));
    require(o.factored(), "case-1 operator does not factor");
    require(o.nonzero_residuals() == 0, "nonzero residual");
    require(o.factor == (FirstOrderFactor{1, 1, half(a10 - a01)}), "case-1 left factor differs");
    require(o.cofactor == Dx - Dy + LPDO(half(a10 + a01)), "case-1 right factor differs");
  }

  const RatExpr t1 = RatExpr::parameter("t1");
  const RatExpr t3 = RatExpr::parameter("t3");
  const RatExpr r2(ConstScalar::radical(2));
  const LPDO op = Dxx - Dyy + (t3 * X + r2 * t1) * Dx - t3 * X * Dy + LPDO(half(r2 * t1 * t3 * X + t1 * t1));
  const auto o = factor_left(op, at(-1));
  require(o.factored(), "sqrt(2) family does not factor");
  require(o.factor.p3 == half(RatExpr(2) * t3 * X + r2 * t1), "sqrt(2) family left factor differs");
  require(o.cofactor == Dx - Dy + LPDO(half(r2 * t1)), "sqrt(2) family right factor differs");
  require(radical_generators({o.factor.p3, o.cofactor.coeff(0, 0)}) == std::vector<ConstScalar::Radicand>{2},
          "tower is not Q(sqrt(2))");
  return "symbolic case 1 and the Q(sqrt(2)) family";
}

std::string riccati_check() {
  Gen g(501);
  const RatExpr p = RatExpr::symbol(Symbol::jet(0, 0));
  const RatExpr px = RatExpr::symbol(Symbol::jet(1, 0));
  auto in_x = [&](int deg) {
    Poly out;
    for (int e = 0; e <= deg; ++e) out += Poly::var(Symbol::x).pow(static_cast<unsigned>(e)).scaled(g.rational());
    return RatExpr(out);
  };
  double worst = 0;
  const int count = 50;
  for (int t = 0; t < count; ++t) {
    RatExpr a20;
    do {
      a20 = in_x(g.integer(0, 3));
    } while (a20.is_zero());
    const RatExpr a10 = in_x(3);
    const RatExpr a00 = in_x(3);
    const auto start = std::chrono::steady_clock::now();
    const auto problem = degenerate_constraints(a20 * Dxx + a10 * Dx + LPDO(a00), RatExpr(0));
    worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    const RatExpr a20x = diff(a20, Direction::X);
    const RatExpr expect = px + p * p + ((RatExpr(2) * a20x - a10) / a20) * p +
                           (a00 + diff(a20x, Direction::X) - diff(a10, Direction::X)) / a20;
    require(problem.necessary_precondition.is_zero(), "precondition does not vanish");
    require(problem.constraints == std::vector<RatExpr>{expect}, "constraint differs from the Riccati formula");
  }
  require(worst < 1.0, "an instance took over 1 s");
  FactorOptions o;
  o.p3 = X;
  const auto done = factor_left(Dxx + X * Dx, o);
  require(done.factored() && done.factor.to_operator() == Dx + LPDO(X) && done.cofactor == Dx,
          "psi = x does not complete Dxx + x Dx");
  std::ostringstream os;
  os << count << " random LODOs, slowest " << worst << " s; psi = x completes";
  return os.str();
}

std::string round_trip_check() {
  Gen g(601);
  int total = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 200; ++t) {
      RatExpr w;
      FirstOrderFactor f;
      LPDO b;
      LPDO a;
      do {
        w = RatExpr(g.rational(3, 2));
        f = FirstOrderFactor{1, -w, RatExpr(g.poly(2, 4))};
        b = g.operator_of_order(n - 1, 2, 3);
        a = compose(f.to_operator(), b);
      } while (root_multiplicity(char_poly(a), w) != 1);
      const auto o = factor_left(a, at(w));
      std::ostringstream where;
      where << "n=" << n << " instance " << t;
      require(o.factored(), where.str() + " not factored");
      require(o.residuals.size() == static_cast<std::size_t>(n - 1), where.str() + " residual count");
      for (const auto& r : o.residuals) require(r.is_zero(), where.str() + " nonzero residual");
      require(o.factor == f, where.str() + " factor not recovered");
      require(o.cofactor == b, where.str() + " cofactor not recovered");
      ++total;
    }
  }
  return std::to_string(total) + " instances recovered exactly";
}

std::string condition_count_check() {
  Gen g(701);
  int total = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 50; ++t) {
      // Distinct constant simple roots, random lower-order part.
      std::vector<RatExpr> roots;
      LPDO top(1);
      while (static_cast<int>(roots.size()) < n) {
        const RatExpr w(g.rational(4, 2));
        if (std::find(roots.begin(), roots.end(), w) != roots.end()) continue;
        roots.push_back(w);
        top = compose(top, Dx - w * Dy);
      }
      LPDO a = LPDO::from_coeffs({});
      for (const auto& [idx, c] : top.coeffs()) {
        if (idx.order() == n) a.set(idx.j, idx.k, c);
      }
      a += g.operator_of_order(n - 1, 1, 6);
      const RatExpr w = roots[static_cast<std::size_t>(g.integer(0, n - 1))];
      const auto o = factor_left(a, at(w));
      require(o.root && o.root->multiplicity == 1, "root is not simple");
      require(o.residuals.size() == static_cast<std::size_t>(n - 1),
              "n=" + std::to_string(n) + " gave " + std::to_string(o.residuals.size()) + " residuals");
      ++total;
    }
  }
  return std::to_string(total) + " operators, n-1 residuals each";
}

std::string laws_check() {
  Gen g(801);
  const int cases = 200;
  for (int t = 0; t < cases; ++t) {
    const LPDO a = g.operator_of_order(g.integer(0, 3), 2);
    const LPDO b = g.operator_of_order(g.integer(0, 2), 2);
    const LPDO c = g.operator_of_order(g.integer(0, 2), 1);
    require(transpose(transpose(a)) == a, "transpose is not an involution");
    require(transpose(compose(a, b)) == compose(transpose(b), transpose(a)), "transpose anti-homomorphism");
    require(compose(compose(a, b), c) == compose(a, compose(b, c)), "composition is not associative");

    const RatExpr w0(g.rational());
    const LPDO f = Dx - w0 * Dy + LPDO(g.rat(1));
    const LPDO q = g.operator_of_order(g.integer(1, 3), 2);
    const CharPoly pf = char_poly(compose(f, q));
    const CharPoly pq = char_poly(q);
    require(pf.coeffs.size() == pq.coeffs.size() + 1, "symbol degree");
    for (std::size_t k = 0; k < pf.coeffs.size(); ++k) {
      RatExpr expect;
      if (k < pq.coeffs.size()) expect += pq.coeffs[k];
      if (k >= 1) expect -= w0 * pq.coeffs[k - 1];
      require(pf.coeffs[k] == expect, "symbol is not multiplicative");
    }

    const RatExpr u = g.rat();
    const RatExpr v = g.nonzero_rat();
    const RatExpr s = g.rat(1);
    require(u + v == v + u && u * v == v * u, "commutativity");
    require((u + v) + s == u + (v + s) && (u * v) * s == u * (v * s), "associativity");
    require(u * (v + s) == u * v + u * s, "distributivity");
    require((v * v.inverse()).is_one() && (u - u).is_zero(), "inverses");
    for (Direction d : {Direction::X, Direction::Y}) {
      require(diff(u * v, d) == diff(u, d) * v + u * diff(v, d), "Leibniz rule");
      require(diff(u / v, d) == (diff(u, d) * v - u * diff(v, d)) / (v * v), "quotient rule");
    }
  }
  return std::to_string(cases) + " cases per law, no failures";
}

std::string elliptic_check() {
  const auto o = factor_left(Dxx + Dyy);
  const RatExpr i(ConstScalar::imaginary_unit());
  require(o.factored(), "not factored");
  require(o.factor.to_operator() == Dx + i * Dy, "left factor is not Dx + i Dy");
  require(o.cofactor == Dx - i * Dy, "right factor is not Dx - i Dy");
  require(o.root && o.root->extension_used == std::vector<ConstScalar::Radicand>{-1}, "extension not recorded");
  return "(Dx + i Dy)(Dx - i Dy), adjoined sqrt(-1)";
}

struct Criterion {
  int id;
  const char* name;
  double limit;  // seconds, 0 for none
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Landau identity", 0.1, landau},
      {2, "Poisson operator branches", 1.0, poisson_check},
      {3, "A_a family", 1.0, a_family_check},
      {4, "hyperbolic class", 2.0, hyperbolic_check},
      {5, "degenerate Riccati (limit 1 s per instance)", 0, riccati_check},
      {6, "round trip", 60.0, round_trip_check},
      {7, "condition count", 60.0, condition_count_check},
      {8, "algebraic laws", 0, laws_check},
      {9, "elliptic path", 0.1, elliptic_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit > 0 && secs >= c.limit) {
      ok = false;
      detail += " (over the time limit)";
    }
    if (!ok) ++failed;
    char limit[32] = "no time limit";
    if (c.limit > 0) std::snprintf(limit, sizeof limit, "limit %.1f s", c.limit);
    std::printf("%s criterion %d: %s [%.3f s, %s] %s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, limit, detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
