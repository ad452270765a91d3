// Candidate solutions of Riccati problems and full factorization trees.

#include <algorithm>
#include <map>

#include "lpdo/errors.hpp"
#include "lpdo/factorization.hpp"

namespace lpdo {

namespace {

using Solution = std::map<Symbol::Id, Poly>;

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

bool is_unknown(Symbol::Id id, const std::vector<Symbol::Id>& unknowns) {
  return std::find(unknowns.begin(), unknowns.end(), id) != unknowns.end();
}

// Splits a numerator into polynomial equations in the unknowns, one per
// monomial in the remaining symbols.
void collect_equations(const Poly& p, const std::vector<Symbol::Id>& unknowns, std::vector<Poly>& eqs) {
  std::map<Monomial, std::vector<Poly::Term>, MonomialLess> groups;
  for (const auto& t : p.terms()) {
    Monomial mine;
    Monomial rest;
    for (const auto& [id, e] : t.mono.factors()) {
      if (is_unknown(id, unknowns)) {
        mine = mine * Monomial::var(id, e);
      } else {
        rest = rest * Monomial::var(id, e);
      }
    }
    groups[rest].push_back({mine, t.coeff});
  }
  for (auto& [m, terms] : groups) eqs.push_back(Poly::from_terms(std::move(terms)));
}

std::vector<Poly> apply(const std::vector<Poly>& eqs, Symbol::Id id, const Poly& value) {
  std::vector<Poly> out;
  for (const auto& e : eqs) {
    Poly s = substitute(e, {{id, value}});
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

void solve(std::vector<Poly> eqs, Solution partial, std::vector<Solution>& out, std::size_t cap) {
  if (out.size() >= cap) return;
  eqs.erase(std::remove_if(eqs.begin(), eqs.end(), [](const Poly& e) { return e.is_zero(); }), eqs.end());
  for (const auto& e : eqs) {
    if (e.is_constant()) return;
  }
  if (eqs.empty()) {
    out.push_back(std::move(partial));
    return;
  }
  auto assign = [&](Symbol::Id u, const Poly& value) {
    Solution next;
    for (const auto& [id, v] : partial) next[id] = substitute(v, {{u, value}});
    next[u] = value;
    solve(apply(eqs, u, value), std::move(next), out, cap);
  };
  // Linear elimination first: u appearing with degree 1 and a constant
  // coefficient.
  for (const auto& e : eqs) {
    for (auto u : e.variables()) {
      if (e.degree_in(u) != 1) continue;
      const auto cs = e.coeffs_in(u);
      if (!cs[1].is_constant()) continue;
      assign(u, (-cs[0]).scaled(cs[1].constant_value().inverse()));
      return;
    }
  }
  // Then a univariate equation, branching over its roots.
  for (const auto& e : eqs) {
    const auto vars = e.variables();
    if (vars.size() != 1) continue;
    std::vector<RatExpr> coeffs;
    for (const auto& c : e.coeffs_in(vars.front())) coeffs.emplace_back(c);
    for (const auto& [root, m] : univariate_roots(coeffs)) assign(vars.front(), root.num());
    return;
  }
}

}  // namespace

std::vector<RatExpr> riccati_candidates(const RiccatiProblem& problem) {
  std::vector<RatExpr> found;
  if (!problem.necessary_precondition.is_zero()) return found;
  const Symbol::Id c1 = Symbol::internal("c1");
  const Symbol::Id c2 = Symbol::internal("c2");
  const Symbol::Id c3 = Symbol::internal("c3");
  const RatExpr x = RatExpr::x();
  const RatExpr y = RatExpr::y();
  struct Template {
    RatExpr form;
    std::vector<Symbol::Id> unknowns;
  };
  const std::vector<Template> templates = {
      {RatExpr(), {}},
      {RatExpr::symbol(c3), {c3}},
      {RatExpr::symbol(c1) * x + RatExpr::symbol(c2) * y + RatExpr::symbol(c3), {c1, c2, c3}},
  };
  for (const auto& t : templates) {
    std::vector<Poly> eqs;
    bool impossible = false;
    for (const auto& c : problem.constraints) {
      Assignment jets;
      for (auto id : c.variables()) {
        if (!Symbol::is_jet(id)) continue;
        const auto [dx, dy] = Symbol::jet_order(id);
        jets[id] = diff(t.form, dx, dy);
      }
      RatExpr value;
      try {
        value = substitute(c, jets);
      } catch (const SubstitutionError&) {
        impossible = true;
        break;
      }
      collect_equations(value.num(), t.unknowns, eqs);
    }
    if (impossible) continue;
    std::vector<Solution> sols;
    solve(eqs, {}, sols, 8);
    for (const auto& s : sols) {
      Assignment values;
      for (auto u : t.unknowns) {
        auto it = s.find(u);
        values[u] = it == s.end() ? RatExpr() : RatExpr(it->second);
      }
      // Solved values may still mention unknowns left free; those are set
      // to zero.
      RatExpr cand = values.empty() ? t.form : substitute(t.form, values);
      Assignment zeros;
      for (auto u : t.unknowns) zeros[u] = RatExpr();
      if (!zeros.empty()) cand = substitute(cand, zeros);
      if (std::find(found.begin(), found.end(), cand) == found.end()) found.push_back(cand);
    }
  }
  return found;
}

namespace {

struct Explorer {
  const FullOptions& options;
  std::map<std::string, std::vector<FactorChain>> memo;

  static std::string key(const LPDO& a) {
    std::string k;
    for (const auto& [idx, c] : a.coeffs()) {
      k += std::to_string(idx.j) + "," + std::to_string(idx.k) + ":" + c.to_string() + ";";
    }
    return k;
  }

  // Factored outcomes on one side, completing Riccati problems by candidate
  // search.
  std::vector<FactorizationOutcome> splits(const LPDO& a, Side side) {
    std::vector<FactorizationOutcome> attempts;
    try {
      attempts = side == Side::Left ? factor_left_all(a) : factor_right_all(a);
    } catch (const Error&) {
      return {};
    }
    std::vector<FactorizationOutcome> out;
    for (const auto& o : attempts) {
      if (o.factored()) {
        out.push_back(o);
        continue;
      }
      if (o.status != Status::Degenerate || !o.riccati || !o.root) continue;
      for (const auto& cand : riccati_candidates(*o.riccati)) {
        FactorOptions opts;
        opts.root = o.root->at_infinity ? RootChoice::infinity() : RootChoice::with_value(o.root->value);
        opts.p3 = cand;
        const auto done = side == Side::Left ? factor_left(a, opts) : factor_right(a, opts);
        if (done.factored()) out.push_back(done);
      }
    }
    return out;
  }

  std::vector<FactorChain> chains(const LPDO& a) {
    if (a.order() <= 1) return {{{a}}};
    const std::string k = key(a);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    std::vector<FactorChain> result;
    auto add = [&](FactorChain c) {
      if (result.size() >= options.max_chains) return;
      for (const auto& r : result) {
        if (r.factors == c.factors) return;
      }
      result.push_back(std::move(c));
    };
    for (const auto& o : splits(a, Side::Left)) {
      for (const auto& rest : chains(o.cofactor)) {
        FactorChain c{{o.factor.to_operator()}};
        c.factors.insert(c.factors.end(), rest.factors.begin(), rest.factors.end());
        add(std::move(c));
      }
    }
    if (options.both_sides) {
      for (const auto& o : splits(a, Side::Right)) {
        for (auto rest : chains(o.cofactor)) {
          rest.factors.push_back(o.factor.to_operator());
          add(std::move(rest));
        }
      }
    }
    if (result.empty()) result.push_back({{a}});
    memo[k] = result;
    return result;
  }
};

}  // namespace

std::vector<FactorChain> factor_fully(const LPDO& a, const FullOptions& options) {
  Explorer e{options, {}};
  return e.chains(a);
}

}  // namespace lpdo
