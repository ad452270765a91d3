#include "lpdo/factorization.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "lpdo/errors.hpp"

namespace lpdo {

namespace {

RatExpr psi() { return RatExpr::symbol(Symbol::jet(0, 0)); }

std::vector<ConstScalar::Radicand> new_generators(const RatExpr& value, const CharPoly& p) {
  const auto base = radical_generators(p.coeffs);
  std::vector<ConstScalar::Radicand> out;
  for (auto g : value.radical_generators()) {
    if (!std::binary_search(base.begin(), base.end(), g)) out.push_back(g);
  }
  return out;
}

std::string radical_name(ConstScalar::Radicand g) {
  return g == -1 ? "i" : "sqrt(" + std::to_string(g) + ")";
}

// Key of a jet monomial: highest derivative order, then degree.
std::tuple<int, std::uint32_t> jet_key(const Monomial& m) {
  int order = -1;
  std::uint32_t degree = 0;
  for (const auto& [id, e] : m.factors()) {
    const auto [dx, dy] = Symbol::jet_order(id);
    order = std::max(order, dx + dy);
    degree += e;
  }
  return {order, degree};
}

std::pair<Monomial, Monomial> split_jets(const Monomial& m) {
  Monomial jets;
  Monomial rest;
  for (const auto& [id, e] : m.factors()) {
    if (Symbol::is_jet(id)) {
      jets = jets * Monomial::var(id, e);
    } else {
      rest = rest * Monomial::var(id, e);
    }
  }
  return {jets, rest};
}

// Divides a constraint by the coefficient of its leading jet monomial.
RatExpr normalize_constraint(const RatExpr& c) {
  if (c.is_zero() || !c.contains_jets()) return c;
  const Poly& n = c.num();
  std::optional<Monomial> best;
  for (const auto& t : n.terms()) {
    const Monomial jets = split_jets(t.mono).first;
    if (jets.is_one()) continue;
    if (!best || jet_key(jets) > jet_key(*best) ||
        (jet_key(jets) == jet_key(*best) && compare(jets, *best) > 0)) {
      best = jets;
    }
  }
  std::vector<Poly::Term> coeff;
  for (const auto& t : n.terms()) {
    auto [jets, rest] = split_jets(t.mono);
    if (jets == *best) coeff.push_back({rest, t.coeff});
  }
  return RatExpr::make(n, Poly::from_terms(std::move(coeff)));
}

std::vector<RatExpr> normalize_constraints(const std::vector<RatExpr>& cs) {
  std::vector<RatExpr> out;
  for (const auto& c : cs) {
    if (!c.is_zero()) out.push_back(normalize_constraint(c));
  }
  return out;
}

// Applies a map to every coefficient carried by an outcome.
void transform_outcome(FactorizationOutcome& out, const std::function<RatExpr(const RatExpr&)>& f) {
  out.factor = {f(out.factor.p1), f(out.factor.p2), f(out.factor.p3)};
  LPDO::Coeffs coeffs;
  for (const auto& [idx, c] : out.cofactor.coeffs()) coeffs.emplace(idx, f(c));
  out.cofactor = LPDO::from_coeffs(coeffs);
  for (auto& r : out.residuals) r = f(r);
  if (out.riccati) {
    for (auto& c : out.riccati->constraints) c = f(c);
    out.riccati->constraints = normalize_constraints(out.riccati->constraints);
    out.riccati->necessary_precondition = f(out.riccati->necessary_precondition);
  }
}

// Rewrites an outcome found in the coordinates (u, v) = M (x, y) back into
// x, y, where `inv` is M^-1.
void change_outcome_vars(FactorizationOutcome& out, const ConstMatrix& inv) {
  out.factor = FirstOrderFactor::from_operator(change_vars(out.factor.to_operator(), inv));
  out.cofactor = change_vars(out.cofactor, inv);
  for (auto& r : out.residuals) r = change_vars(r, inv);
  if (out.riccati) {
    for (auto& c : out.riccati->constraints) c = change_vars(c, inv);
    out.riccati->constraints = normalize_constraints(out.riccati->constraints);
    out.riccati->necessary_precondition = change_vars(out.riccati->necessary_precondition, inv);
  }
}

// Substitutes p3 = expr (expr may contain jets) in jet symbols.
RatExpr substitute_p3(const RatExpr& value, const RatExpr& expr) {
  Assignment assignment;
  for (auto id : value.variables()) {
    if (!Symbol::is_jet(id)) continue;
    const auto [dx, dy] = Symbol::jet_order(id);
    assignment[id] = diff(expr, dx, dy);
  }
  return assignment.empty() ? value : substitute(value, assignment);
}

LPDO cofactor_of(const LevelState& st) {
  LPDO out;
  for (const auto& [idx, c] : st.solved) out.set(idx.j, idx.k, c);
  return out;
}

LevelState top_state(const LPDO& a, const RatExpr& w) {
  LevelState st;
  st.omega = w;
  const int n = a.order();
  const auto top = solve_top(a, w);
  for (int k = 0; k < n; ++k) st.solved[DerivIndex{n - 1 - k, k}] = top[static_cast<std::size_t>(k)];
  return st;
}

FactorizationOutcome run_levels(const LPDO& a, LevelState st, bool keep_top_surplus) {
  const int n = a.order();
  FactorizationOutcome out;
  const RatExpr surplus = solve_level(st, a, n - 1);
  if (keep_top_surplus && !surplus.is_zero()) out.residuals.push_back(surplus);
  for (int m = n - 2; m >= 0; --m) out.residuals.push_back(solve_level(st, a, m));
  out.factor = {RatExpr(1), -st.omega, st.p3};
  out.cofactor = cofactor_of(st);
  out.status = out.nonzero_residuals() == 0 ? Status::Factored : Status::ConditionsFail;
  return out;
}

RatExpr precondition(const LPDO& a, const LevelState& st) {
  const int n = a.order();
  RatExpr acc;
  for (int k = 0; k < n; ++k) {
    const RatExpr b = a.coeff(n - 1 - k, k) - st.L(st.p(n - 1 - k, k));
    acc = acc * st.omega + b;
  }
  return acc;
}

std::pair<RiccatiProblem, LevelState> degenerate_run(const LPDO& a, const RatExpr& w) {
  LevelState st = top_state(a, w);
  RiccatiProblem problem;
  problem.necessary_precondition = precondition(a, st);
  if (!problem.necessary_precondition.is_zero()) return {problem, st};
  st.p3 = psi();
  const int n = a.order();
  // With the precondition satisfied the level n-1 surplus vanishes for any p3.
  solve_level(st, a, n - 1);
  std::vector<RatExpr> raw;
  for (int m = n - 2; m >= 0; --m) raw.push_back(solve_level(st, a, m));
  problem.constraints = normalize_constraints(raw);
  return {problem, st};
}

FactorizationOutcome attempt_finite(const LPDO& a, const RatExpr& w, const std::optional<RatExpr>& candidate) {
  const CharPoly p = char_poly(a);
  if (!p(w).is_zero()) throw NotARoot(w.to_string() + " is not a root of the characteristic polynomial");
  Root root;
  root.value = w;
  root.multiplicity = root_multiplicity(p, w);
  root.extension_used = new_generators(w, p);

  FactorizationOutcome out;
  if (candidate) {
    out = complete_with_p3(a, w, *candidate);
  } else {
    LevelState st = top_state(a, w);
    std::vector<RatExpr> top;
    for (int k = 0; k < a.order(); ++k) top.push_back(st.p(a.order() - 1 - k, k));
    if (auto p3 = solve_p3(a, w, top)) {
      st.p3 = *p3;
      out = run_levels(a, std::move(st), false);
    } else {
      auto [problem, state] = degenerate_run(a, w);
      out.factor = {RatExpr(1), -w, psi()};
      out.cofactor = cofactor_of(state);
      if (problem.necessary_precondition.is_zero()) {
        out.status = Status::Degenerate;
      } else {
        out.status = Status::ConditionsFail;
        out.residuals = {problem.necessary_precondition};
      }
      out.riccati = std::move(problem);
    }
  }
  out.root = root;
  return out;
}

FactorizationOutcome attempt_infinity(const LPDO& a, const std::optional<RatExpr>& candidate) {
  const CharPoly p = char_poly(a);
  const int mult = p.n - p.degree();
  if (mult == 0) throw NotARoot("the characteristic polynomial has no root at infinity");
  const ConstMatrix s = ConstMatrix::swap();
  std::optional<RatExpr> moved;
  if (candidate) moved = change_vars(*candidate, s);
  FactorizationOutcome out = attempt_finite(change_vars(a, s), RatExpr(), moved);
  change_outcome_vars(out, s);
  Root root;
  root.at_infinity = true;
  root.multiplicity = mult;
  out.root = root;
  out.normalization = {Normalization::Kind::Swap, s};
  return out;
}

// Root of P after the shear (u, v) = (x + c y, y).
std::optional<RatExpr> sheared_root(const Root& r, const ConstScalar& c) {
  if (r.at_infinity) return RatExpr(-c.inverse());
  const RatExpr d = RatExpr(1) - RatExpr(c) * r.value;
  if (d.is_zero()) return std::nullopt;
  return r.value / d;
}

class Runner {
public:
  Runner(const LPDO& a, const FactorOptions& options) : a_(a), options_(options) {
    const int n = a.order();
    if (n < 2) throw std::invalid_argument("factorization needs an operator of order >= 2");
    if (options.normalize == FactorOptions::Normalize::Shear && a.coeff(n, 0).is_zero()) {
      const int limit = options.max_shear > 0 ? options.max_shear : n + 1;
      for (int c = 1; c <= limit; ++c) {
        const ConstMatrix m = ConstMatrix::shear(ConstScalar(c));
        LPDO moved = change_vars(a, m);
        if (!moved.coeff(n, 0).is_zero()) {
          shear_ = m;
          sheared_ = std::move(moved);
          break;
        }
      }
    }
  }

  FactorizationOutcome run(const Root& r, const std::optional<RatExpr>& candidate) const {
    FactorizationOutcome out;
    if (shear_) {
      out = run_sheared(r, candidate);
    } else if (r.at_infinity) {
      out = attempt_infinity(a_, candidate);
    } else {
      out = attempt_finite(a_, r.value, candidate);
    }
    for (auto g : out.root->extension_used) out.notices.push_back("adjoined " + radical_name(g));
    if (out.factored() && !verify(out, a_).is_zero()) {
      throw std::logic_error("internal error: factorization does not reproduce the operator");
    }
    return out;
  }

private:
  FactorizationOutcome run_sheared(const Root& r, const std::optional<RatExpr>& candidate) const {
    const ConstMatrix& m = *shear_;
    const ConstMatrix inv = m.inverse();
    const ConstScalar c = m(0, 1);
    auto w = sheared_root(r, c);
    if (!w) throw NotARoot("root is not a root after the shear");
    // Direction part of the factor back in the original coordinates.
    const LPDO direction = change_vars(LPDO::dx() - (*w) * LPDO::dy(), inv);
    const RatExpr g = !direction.coeff(1, 0).is_zero() ? direction.coeff(1, 0) : direction.coeff(0, 1);

    std::optional<RatExpr> moved;
    if (candidate) {
      // Normalized factor F with the supplied p3; F o g has the unnormalized
      // zero-order term.
      LPDO f = (RatExpr(1) / g) * direction;
      f.set(0, 0, *candidate);
      moved = change_vars(compose(f, LPDO(g)).coeff(0, 0), m);
    }
    FactorizationOutcome out = attempt_finite(*sheared_, *w, moved);
    const CharPoly p = char_poly(a_);
    Root root = r;
    root.multiplicity = r.at_infinity ? p.n - p.degree() : root_multiplicity(p, r.value);
    root.extension_used = r.at_infinity ? std::vector<ConstScalar::Radicand>{} : new_generators(r.value, p);

    change_outcome_vars(out, inv);
    if (out.riccati) {
      if (g.is_constant()) {
        // p3 of the unnormalized factor is g times the normalized one.
        const RatExpr scaled = g * psi();
        transform_outcome(out, [&](const RatExpr& e) { return substitute_p3(e, scaled); });
      } else {
        out.notices.push_back("Riccati constraints refer to the zero-order term before normalization");
      }
    }
    normalize(out.factor, out.cofactor);
    out.root = root;
    out.normalization = {Normalization::Kind::Shear, m};
    return out;
  }

  const LPDO& a_;
  const FactorOptions& options_;
  std::optional<ConstMatrix> shear_;
  std::optional<LPDO> sheared_;
};

Root root_from_choice(const CharPoly& p, const RootChoice& choice) {
  Root r;
  switch (choice.kind) {
    case RootChoice::Kind::Infinity:
      r.at_infinity = true;
      r.multiplicity = p.n - p.degree();
      return r;
    case RootChoice::Kind::Value:
      r.value = choice.value;
      return r;
    case RootChoice::Kind::Index: {
      const RootSet rs = find_roots(p);
      if (choice.index >= rs.roots.size()) {
        throw std::invalid_argument("root index " + std::to_string(choice.index) + " out of range (" +
                                    std::to_string(rs.roots.size()) + " roots)");
      }
      return rs.roots[choice.index];
    }
    case RootChoice::Kind::Auto:
      break;
  }
  throw std::logic_error("automatic root choice has no single root");
}

using CandidateFor = std::function<std::optional<RatExpr>(const Root&)>;

std::vector<FactorizationOutcome> run_all(const LPDO& a, const FactorOptions& options, const CandidateFor& candidate) {
  Runner runner(a, options);
  const CharPoly p = char_poly(a);
  std::vector<FactorizationOutcome> outs;
  if (options.root.kind != RootChoice::Kind::Auto) {
    const Root r = root_from_choice(p, options.root);
    outs.push_back(runner.run(r, candidate(r)));
    return outs;
  }
  const RootSet rs = find_roots(p);
  for (const auto& r : rs.roots) outs.push_back(runner.run(r, candidate(r)));
  if (!rs.unresolved.empty()) {
    CharPoly rest{static_cast<int>(rs.unresolved.size()) - 1, {rs.unresolved.rbegin(), rs.unresolved.rend()}};
    const std::string note = "no supported roots for the factor " + rest.to_string();
    for (auto& o : outs) o.notices.push_back(note);
    if (outs.empty()) {
      FactorizationOutcome none;
      none.status = Status::UnsupportedRoot;
      none.notices.push_back(note);
      outs.push_back(std::move(none));
    }
  }
  return outs;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Factored:
      return "Factored";
    case Status::ConditionsFail:
      return "ConditionsFail";
    case Status::Degenerate:
      return "Degenerate";
    case Status::UnsupportedRoot:
      return "UnsupportedRoot";
  }
  return "?";
}

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

std::size_t FactorizationOutcome::nonzero_residuals() const {
  return static_cast<std::size_t>(
      std::count_if(residuals.begin(), residuals.end(), [](const RatExpr& r) { return !r.is_zero(); }));
}

std::vector<LPDO> FactorizationOutcome::product() const {
  if (side == Side::Left) return {factor.to_operator(), cofactor};
  return {cofactor, factor.to_operator()};
}

RatExpr LevelState::L(const RatExpr& f) const {
  if (f.is_zero()) return {};
  RatExpr out = diff(f, Direction::X);
  if (!omega.is_zero()) out -= omega * diff(f, Direction::Y);
  return out;
}

RatExpr LevelState::p(int j, int k) const {
  auto it = solved.find(DerivIndex{j, k});
  return it == solved.end() ? RatExpr() : it->second;
}

std::vector<RatExpr> solve_top(const LPDO& a, const RatExpr& w) {
  const int n = a.order();
  std::vector<RatExpr> q;
  RatExpr prev;
  for (int k = 0; k < n; ++k) {
    prev = a.coeff(n - k, k) + w * prev;
    q.push_back(prev);
  }
  if (!(a.coeff(0, n) + w * prev).is_zero()) {
    throw NotARoot(w.to_string() + " is not a root of the characteristic polynomial");
  }
  return q;
}

std::optional<RatExpr> solve_p3(const LPDO& a, const RatExpr& w, const std::vector<RatExpr>& top) {
  const int n = a.order();
  LevelState st;
  st.omega = w;
  RatExpr num;
  RatExpr den;
  for (int k = 0; k < n; ++k) {
    const RatExpr& t = top[static_cast<std::size_t>(k)];
    num = num * w + (a.coeff(n - 1 - k, k) - st.L(t));
    den = den * w + t;
  }
  if (den.is_zero()) return std::nullopt;
  return num / den;
}

RatExpr solve_level(LevelState& state, const LPDO& a, int m) {
  RatExpr prev;
  for (int k = 0; k <= m; ++k) {
    const RatExpr pk = state.p(m - k, k);
    RatExpr rhs = a.coeff(m - k, k);
    if (!pk.is_zero()) rhs -= state.L(pk) + state.p3 * pk;
    RatExpr q = rhs + state.omega * prev;
    if (k == m) return q;
    state.solved[DerivIndex{m - 1 - k, k}] = q;
    prev = std::move(q);
  }
  return {};
}

RiccatiProblem degenerate_constraints(const LPDO& a, const RatExpr& w) {
  if (a.order() < 2) throw std::invalid_argument("factorization needs an operator of order >= 2");
  return degenerate_run(a, w).first;
}

FactorizationOutcome complete_with_p3(const LPDO& a, const RatExpr& w, const RatExpr& candidate) {
  LevelState st = top_state(a, w);
  st.p3 = candidate;
  FactorizationOutcome out = run_levels(a, std::move(st), true);
  const CharPoly p = char_poly(a);
  Root root;
  root.value = w;
  root.multiplicity = root_multiplicity(p, w);
  root.extension_used = new_generators(w, p);
  out.root = root;
  return out;
}

std::vector<FactorizationOutcome> factor_left_all(const LPDO& a, const FactorOptions& options) {
  return run_all(a, options, [&](const Root&) { return options.p3; });
}

FactorizationOutcome select_outcome(const std::vector<FactorizationOutcome>& attempts) {
  if (attempts.empty()) return {};
  for (const auto& o : attempts) {
    if (o.status == Status::Factored) return o;
  }
  for (const auto& o : attempts) {
    if (o.status == Status::Degenerate) return o;
  }
  const FactorizationOutcome* best = nullptr;
  for (const auto& o : attempts) {
    if (o.status != Status::ConditionsFail) continue;
    if (best == nullptr || o.nonzero_residuals() < best->nonzero_residuals()) best = &o;
  }
  return best != nullptr ? *best : attempts.front();
}

FactorizationOutcome factor_left(const LPDO& a, const FactorOptions& options) {
  return select_outcome(factor_left_all(a, options));
}

std::vector<FactorizationOutcome> factor_right_all(const LPDO& a, const FactorOptions& options) {
  const LPDO at = transpose(a);
  // Left factor of the transpose F = p1 Dx + p2 Dy + psi gives the right
  // factor (F^t)/g with g = -p1 (or -p2) and p3 = (psi - p1_x - p2_y)/g,
  // i.e. psi = g r3 + p1_x + p2_y.
  auto direction = [](const Root& r) {
    if (r.at_infinity) return std::pair<RatExpr, RatExpr>{RatExpr(), RatExpr(1)};
    return std::pair<RatExpr, RatExpr>{RatExpr(1), -r.value};
  };
  auto psi_of = [&](const Root& r, const RatExpr& r3) {
    const auto [p1, p2] = direction(r);
    const RatExpr g = -(p1.is_zero() ? p2 : p1);
    return g * r3 + diff(p1, Direction::X) + diff(p2, Direction::Y);
  };
  auto outs = run_all(at, options, [&](const Root& r) -> std::optional<RatExpr> {
    if (!options.p3) return std::nullopt;
    return psi_of(r, *options.p3);
  });
  for (auto& o : outs) {
    o.side = Side::Right;
    if (o.status == Status::UnsupportedRoot) continue;
    const LPDO f = transpose(o.factor.to_operator());
    const RatExpr g = !f.coeff(1, 0).is_zero() ? f.coeff(1, 0) : f.coeff(0, 1);
    o.factor = FirstOrderFactor::from_operator(g.inverse() * f);
    o.cofactor = compose(transpose(o.cofactor), LPDO(g));
    if (o.riccati) {
      const RatExpr expr = psi_of(*o.root, psi());
      transform_outcome(o, [&](const RatExpr& e) { return substitute_p3(e, expr); });
    }
    if (o.factored() && !verify(o, a).is_zero()) {
      throw std::logic_error("internal error: right factorization does not reproduce the operator");
    }
  }
  return outs;
}

FactorizationOutcome factor_right(const LPDO& a, const FactorOptions& options) {
  return select_outcome(factor_right_all(a, options));
}

LPDO verify(const FirstOrderFactor& factor, const LPDO& cofactor, const LPDO& a) {
  return compose(factor.to_operator(), cofactor) - a;
}

LPDO verify(const FactorizationOutcome& outcome, const LPDO& a) {
  const auto p = outcome.product();
  return compose(p[0], p[1]) - a;
}

}  // namespace lpdo
