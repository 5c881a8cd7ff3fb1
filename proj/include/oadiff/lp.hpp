// ---------------------------------------------------------------------------
// lp.hpp -- exact rational LP/ILP engine and the design-existence models.
//
// The engine is a dense two-phase primal simplex over GMP rationals with a
// deterministic anti-cycling pivot rule, plus a depth-first branch-and-bound
// for the integer variants.  The model builders transcribe the linear /
// integer programs whose optima are the extremal design numbers: maximum
// word frequency in an orthogonal array (rho) or difference scheme (rho_E),
// minimum run counts (F, E, R_min, R_star), and the best identity-row ratio
// of alphabet-reduction (gamma, gamma_E) and cover (delta, bar_delta) pairs.
// ---------------------------------------------------------------------------
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oadiff/arpa.hpp"
#include "oadiff/rational.hpp"
#include "oadiff/symbol_array.hpp"

namespace oadiff {

enum class ModelKind {
  generic,
  rho,
  rho_E,
  F,
  E,
  R_min,
  R_star,
  gamma,
  gamma_E,
  delta,
  bar_delta,
};

enum class VarRole { generic, P, Q, R };

struct LpVariable {
  std::string name;
  VarRole role = VarRole::generic;
  Word word;               // meaningful for roles P and Q
  bool integral = false;
  // All variables are implicitly bounded below by 0.
};

enum class Rel { le, eq, ge };

struct LpConstraint {
  std::vector<std::pair<int, Rational>> terms;  // (variable index, coefficient)
  Rel rel = Rel::eq;
  Rational rhs = 0;
};

struct LpModel {
  ModelKind kind = ModelKind::generic;
  int q = 0;         // alphabet size (or 2 for Boolean models)
  int nu = 0;        // word length of the P/Q variables
  int strength = 0;  // t or k
  int p_or_d = 0;    // symbol budget p / weight budget d (pair models)
  bool maximize = true;
  std::vector<LpVariable> vars;
  std::vector<LpConstraint> cons;
  std::vector<std::pair<int, Rational>> objective;

  int add_var(LpVariable v);
  int var_by_name(const std::string& name) const;  // -1 when absent
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value = 0;
  std::vector<Rational> assignment;  // indexed like model.vars
};

// Exact simplex; requires a purely continuous model (Error("BadArgs") if an
// integrality flag is set).  Deterministic for a fixed model.
LpSolution solve_lp(const LpModel& model);

struct IlpOptions {
  long node_limit = 1000000;
  // A value known to be attained by some feasible integral solution; used
  // only for (strict) pruning so the optimum is never cut off.
  std::optional<Rational> objective_hint;
};

// Depth-first branch and bound over exact LP relaxations.  Branches on the
// fractional integral variable with the lexicographically smallest name.
LpSolution solve_ilp(const LpModel& model, const IlpOptions& options = {});

// ------------------------------------------------------------------ models
LpModel model_rho(int nu, int q, int t);
LpModel model_rho_E(int nu, int q, int t);
LpModel model_F(int nu, int q, int t);
LpModel model_E(int nu, int q, int t);
LpModel model_R_min(int nu, int q, int t, const Rational& rho);
LpModel model_R_star(int nu, int q, int t, long F_value);
LpModel model_gamma(int q, int p, int k);
LpModel model_gamma_E(int q, int p, int k);
LpModel model_delta(int n, int d, int k);
LpModel model_bar_delta(int n, int d, int k);

// -------------------------------------------------------------- symmetries
// Variable-index permutations that map the model onto itself (column
// permutations and 0-fixing symbol permutations for rho-type models,
// simultaneous column/symbol conjugations for gamma-type models).  Empty
// when no safe group is known for the model kind.
std::vector<std::vector<int>> model_symmetry_generators(const LpModel& model);

// Solve on the invariant subspace of the group spanned by `generators`
// (variables aggregated per orbit, duplicate rows merged), then expand the
// solution back to the full variable space.  Exact: the model is mapped
// onto itself by the group and the objective is invariant, so restricting
// to the invariant subspace preserves the optimum.
LpSolution solve_with_symmetry(const LpModel& model,
                               const std::vector<std::vector<int>>& generators);

// One-stop solve used by the CLI and the test harness: ILP when integer
// flags are present (with a safe pruning hint where one is known), symmetry
// aggregation for large continuous models, plain simplex otherwise.
LpSolution solve_model(const LpModel& model);

// ---------------------------------------------------------------- witnesses
struct Witness {
  bool is_pair = false;
  SymbolArray array;  // set when !is_pair
  ArrayPair pair;     // set when is_pair
};

// Smallest positive integer clearing all P/Q denominators of the solution.
Integer common_scale(const LpModel& model, const LpSolution& solution);

// Scale the optimal frequencies into integer multiplicities and emit the
// concrete array (rho-type models) or pair (gamma/delta-type models).
Witness extract_witness(const LpModel& model, const LpSolution& solution,
                        const Integer& scale);

}  // namespace oadiff
