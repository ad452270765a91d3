#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpdo/char_poly.hpp"
#include "lpdo/operator.hpp"
#include "lpdo/rat_expr.hpp"

namespace lpdo {

enum class Status { Factored, ConditionsFail, Degenerate, UnsupportedRoot };
enum class Side { Left, Right };

const char* to_string(Status s);
const char* to_string(Side s);

/// Unknown p3 (with jets p3_x, p3_y, ...) and the differential constraints
/// it must satisfy for a factorization at a multiple root.
struct RiccatiProblem {
  Symbol::Id unknown = Symbol::jet(0, 0);
  std::vector<RatExpr> constraints;
  /// Must vanish for any p3 to exist.
  RatExpr necessary_precondition;
};

/// Coordinate change applied before the run: (u, v) = matrix (x, y).
struct Normalization {
  enum class Kind { None, Swap, Shear };
  Kind kind = Kind::None;
  ConstMatrix matrix;

  bool applied() const { return kind != Kind::None; }
};

struct FactorizationOutcome {
  Status status = Status::UnsupportedRoot;
  Side side = Side::Left;
  /// Root of the characteristic polynomial of the input operator.
  std::optional<Root> root;
  Normalization normalization;
  FirstOrderFactor factor;
  LPDO cofactor;
  /// One residual per consistency condition (levels n-2 .. 0), preceded by
  /// the level n-1 residual when a supplied p3 leaves it nonzero.
  std::vector<RatExpr> residuals;
  std::optional<RiccatiProblem> riccati;
  std::vector<std::string> notices;

  bool factored() const { return status == Status::Factored; }
  std::size_t nonzero_residuals() const;
  /// The factorization as an ordered product: {factor, cofactor} on the
  /// left side, {cofactor, factor} on the right side.
  std::vector<LPDO> product() const;
};

struct RootChoice {
  enum class Kind { Auto, Index, Value, Infinity };
  Kind kind = Kind::Auto;
  std::size_t index = 0;
  RatExpr value;

  static RootChoice automatic() { return {}; }
  static RootChoice at_index(std::size_t i) { return {Kind::Index, i, {}}; }
  static RootChoice with_value(RatExpr w) { return {Kind::Value, 0, std::move(w)}; }
  static RootChoice infinity() { return {Kind::Infinity, 0, {}}; }
};

struct FactorOptions {
  enum class Normalize { None, Shear };

  RootChoice root;
  /// With Shear, operators with a_{n0} = 0 are first sheared so that the
  /// x-pure coefficient becomes nonzero; roots at infinity are otherwise
  /// handled by swapping x and y.
  Normalize normalize = Normalize::None;
  /// Largest shear tried (0 means n + 1).
  int max_shear = 0;
  /// Candidate p3 for the multiple-root path (complete_with_p3).
  std::optional<RatExpr> p3;
};

/// Cofactor coefficients p_{jk} solved so far, with the factor
/// Dx - w Dy + p3.
struct LevelState {
  RatExpr omega;
  RatExpr p3;
  std::map<DerivIndex, RatExpr, DerivIndexOrder> solved;

  /// f -> f_x - w f_y.
  RatExpr L(const RatExpr& f) const;
  RatExpr p(int j, int k) const;
};

/// Top cofactor coefficients p_{n-1-k,k}, k = 0..n-1.  Throws NotARoot when
/// w is not a root of the characteristic polynomial.
std::vector<RatExpr> solve_top(const LPDO& a, const RatExpr& w);

/// p3 for a simple root; nullopt when P'(w) vanishes (multiple root).
std::optional<RatExpr> solve_p3(const LPDO& a, const RatExpr& w, const std::vector<RatExpr>& top);

/// Solves the level-m equations for the cofactor coefficients of order m - 1
/// and returns the residual (given minus computed) of the surplus equation.
RatExpr solve_level(LevelState& state, const LPDO& a, int m);

/// Riccati problem at a multiple root w.  Constraints are only filled in
/// when the precondition vanishes.
RiccatiProblem degenerate_constraints(const LPDO& a, const RatExpr& w);

/// Runs every level with p3 fixed to the candidate.
FactorizationOutcome complete_with_p3(const LPDO& a, const RatExpr& w, const RatExpr& candidate);

/// One outcome per root tried (a single one for an explicit root choice).
std::vector<FactorizationOutcome> factor_left_all(const LPDO& a, const FactorOptions& options = {});
/// First Factored outcome, else Degenerate, else the fewest nonzero
/// residuals.
FactorizationOutcome factor_left(const LPDO& a, const FactorOptions& options = {});
FactorizationOutcome select_outcome(const std::vector<FactorizationOutcome>& attempts);

std::vector<FactorizationOutcome> factor_right_all(const LPDO& a, const FactorOptions& options = {});
FactorizationOutcome factor_right(const LPDO& a, const FactorOptions& options = {});

/// compose(factor, cofactor) - a.
LPDO verify(const FirstOrderFactor& factor, const LPDO& cofactor, const LPDO& a);
/// Difference between the outcome's product and a (zero when it holds).
LPDO verify(const FactorizationOutcome& outcome, const LPDO& a);

/// Constant, or linear c1 x + c2 y + c3, solutions of a Riccati problem
/// found by coefficient matching.
std::vector<RatExpr> riccati_candidates(const RiccatiProblem& problem);

struct FactorChain {
  /// Factors whose composition is the input; all first order except
  /// possibly one remainder that could not be split further.
  std::vector<LPDO> factors;
};

struct FullOptions {
  /// Also split off first-order right factors.
  bool both_sides = true;
  std::size_t max_chains = 32;
};

/// All factor chains found by repeatedly splitting off first-order factors
/// over every root, solving Riccati problems by candidate search.
std::vector<FactorChain> factor_fully(const LPDO& a, const FullOptions& options = {});

}  // namespace lpdo
