// ---------------------------------------------------------------------------
// lp_solve.cpp -- exact two-phase primal simplex and branch & bound.
//
// The simplex works on a dense tableau of GMP rationals.  The pivot rule is
// deterministic: most-negative reduced cost with least-index tie-breaking,
// falling back to pure least-index (Bland) selection after a run of
// degenerate pivots, which guarantees termination.  The branch & bound is a
// depth-first search over exact LP relaxations, branching on the fractional
// integral variable with the lexicographically smallest name.
// ---------------------------------------------------------------------------
#include <algorithm>
#include <optional>
#include <vector>

#include "oadiff/errors.hpp"
#include "oadiff/lp.hpp"

namespace oadiff {

namespace lp_detail {

// Simplex over the continuous relaxation (integrality flags ignored).
LpSolution solve_relaxation(const LpModel& model) {
  const int n = static_cast<int>(model.vars.size());
  const int m = static_cast<int>(model.cons.size());

  // Row data normalized to nonnegative right-hand sides.
  struct Row {
    std::vector<Rational> coef;  // dense over structural variables
    Rel rel;
    Rational rhs;
  };
  std::vector<Row> rows(m);
  int n_slack = 0;
  for (int i = 0; i < m; ++i) {
    rows[i].coef.assign(n, Rational(0));
    for (const auto& [var, coef] : model.cons[i].terms) {
      rows[i].coef[var] += coef;
    }
    rows[i].rel = model.cons[i].rel;
    rows[i].rhs = model.cons[i].rhs;
    if (rows[i].rhs < 0) {
      for (Rational& c : rows[i].coef) c = -c;
      rows[i].rhs = -rows[i].rhs;
      rows[i].rel = rows[i].rel == Rel::le   ? Rel::ge
                    : rows[i].rel == Rel::ge ? Rel::le
                                             : Rel::eq;
    }
    if (rows[i].rel != Rel::eq) ++n_slack;
  }

  // Column layout: structural | slack/surplus | artificial | rhs.
  int n_art = 0;
  for (const Row& row : rows) {
    if (row.rel != Rel::le) ++n_art;  // ge and eq need an artificial
  }
  const int art_base = n + n_slack;
  const int cols = n + n_slack + n_art + 1;
  const int rhs_col = cols - 1;

  // Tableau rows 0..m-1 are constraints, row m the phase-2 reduced costs,
  // row m+1 the phase-1 reduced costs.
  std::vector<std::vector<Rational>> T(m + 2,
                                       std::vector<Rational>(cols, Rational(0)));
  std::vector<int> basis(m, -1);
  {
    int slack = n;
    int art = art_base;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) T[i][j] = rows[i].coef[j];
      T[i][rhs_col] = rows[i].rhs;
      switch (rows[i].rel) {
        case Rel::le:
          T[i][slack] = 1;
          basis[i] = slack++;
          break;
        case Rel::ge:
          T[i][slack] = -1;
          ++slack;
          T[i][art] = 1;
          basis[i] = art++;
          break;
        case Rel::eq:
          T[i][art] = 1;
          basis[i] = art++;
          break;
      }
    }
  }

  // Phase-2 costs: minimize internally.
  for (const auto& [var, coef] : model.objective) {
    T[m][var] += model.maximize ? -coef : coef;
  }
  // Phase-1 costs: one per artificial, priced out over the starting basis.
  for (int j = art_base; j < art_base + n_art; ++j) T[m + 1][j] = 1;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= art_base) {
      for (int j = 0; j < cols; ++j) T[m + 1][j] -= T[i][j];
    }
  }

  auto pivot = [&](int row, int col) {
    const Rational p = T[row][col];
    if (T[row][col] != 1) {
      for (int j = 0; j < cols; ++j) {
        if (T[row][j] != 0) T[row][j] /= p;
      }
    }
    for (int i = 0; i < m + 2; ++i) {
      if (i == row || T[i][col] == 0) continue;
      const Rational factor = T[i][col];
      for (int j = 0; j < cols; ++j) {
        if (T[row][j] != 0) T[i][j] -= factor * T[row][j];
      }
    }
    basis[row] = col;
  };

  // Columns eligible for entering: never an artificial.
  const int enter_limit = art_base;

  auto run_phase = [&](int cost_row) -> bool /* bounded */ {
    int degenerate_streak = 0;
    bool use_bland = false;
    while (true) {
      int entering = -1;
      if (use_bland) {
        for (int j = 0; j < enter_limit; ++j) {
          if (T[cost_row][j] < 0) {
            entering = j;
            break;
          }
        }
      } else {
        for (int j = 0; j < enter_limit; ++j) {
          if (T[cost_row][j] < 0 &&
              (entering == -1 || T[cost_row][j] < T[cost_row][entering])) {
            entering = j;
          }
        }
      }
      if (entering == -1) return true;  // phase optimal

      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m; ++i) {
        if (T[i][entering] <= 0) continue;
        Rational ratio = T[i][rhs_col] / T[i][entering];
        if (leave == -1 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == -1) return false;  // unbounded direction

      const bool degenerate = best_ratio == 0;
      pivot(leave, entering);
      if (degenerate) {
        if (++degenerate_streak >= 30) use_bland = true;
      } else {
        degenerate_streak = 0;
        use_bland = false;
      }
    }
  };

  LpSolution solution;
  if (n_art > 0) {
    if (!run_phase(m + 1)) {
      fail("Internal", "phase-1 objective cannot be unbounded");
    }
    // Phase-1 objective value is -T[m+1][rhs]; nonzero means infeasible.
    if (T[m + 1][rhs_col] != 0) {
      solution.status = LpStatus::infeasible;
      return solution;
    }
    // Drive leftover artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (basis[i] < art_base) continue;
      int col = -1;
      for (int j = 0; j < enter_limit; ++j) {
        if (T[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col != -1) pivot(i, col);
      // Otherwise the row is redundant; the artificial stays basic at 0 and
      // can never be selected by a ratio test again.
    }
  }

  if (!run_phase(m)) {
    solution.status = LpStatus::unbounded;
    return solution;
  }

  solution.status = LpStatus::optimal;
  solution.assignment.assign(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) solution.assignment[basis[i]] = T[i][rhs_col];
  }
  solution.value = 0;
  for (const auto& [var, coef] : model.objective) {
    solution.value += coef * solution.assignment[var];
  }
  return solution;
}

}  // namespace lp_detail

int LpModel::add_var(LpVariable v) {
  vars.push_back(std::move(v));
  return static_cast<int>(vars.size()) - 1;
}

int LpModel::var_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

LpSolution solve_lp(const LpModel& model) {
  for (const LpVariable& v : model.vars) {
    if (v.integral) {
      fail("BadArgs", "solve_lp requires a purely continuous model");
    }
  }
  return lp_detail::solve_relaxation(model);
}

LpSolution solve_ilp(const LpModel& model, const IlpOptions& options) {
  bool any_integral = false;
  for (const LpVariable& v : model.vars) any_integral |= v.integral;
  if (!any_integral) {
    fail("BadArgs", "solve_ilp requires at least one integral variable");
  }

  const bool maximize = model.maximize;
  auto strictly_better = [&](const Rational& a, const Rational& b) {
    return maximize ? a > b : a < b;
  };

  std::optional<LpSolution> best;
  struct Node {
    std::vector<LpConstraint> extra;
  };
  std::vector<Node> stack;
  stack.push_back({});
  long processed = 0;

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (++processed > options.node_limit) {
      fail("Budget", "branch-and-bound node limit exceeded");
    }

    LpModel relaxed = model;
    for (const LpConstraint& c : node.extra) relaxed.cons.push_back(c);
    LpSolution sol = lp_detail::solve_relaxation(relaxed);
    if (sol.status == LpStatus::infeasible) continue;
    if (sol.status == LpStatus::unbounded) return sol;

    // Bound pruning: the relaxation bounds every integral solution below.
    if (best && !strictly_better(sol.value, best->value)) continue;
    if (options.objective_hint &&
        strictly_better(*options.objective_hint, sol.value)) {
      continue;  // strictly worse than a known attainable value
    }

    // Fractional integral variable with the lexicographically smallest name.
    int branch_var = -1;
    for (std::size_t j = 0; j < model.vars.size(); ++j) {
      if (!model.vars[j].integral || is_integral(sol.assignment[j])) continue;
      if (branch_var == -1 ||
          model.vars[j].name < model.vars[branch_var].name) {
        branch_var = static_cast<int>(j);
      }
    }
    if (branch_var == -1) {
      if (!best || strictly_better(sol.value, best->value)) best = sol;
      continue;
    }

    const Rational value = sol.assignment[branch_var];
    LpConstraint lo{{{branch_var, Rational(1)}}, Rel::le,
                    Rational(floor_of(value))};
    LpConstraint hi{{{branch_var, Rational(1)}}, Rel::ge,
                    Rational(ceil_of(value))};
    Node up = node;
    up.extra.push_back(hi);
    stack.push_back(std::move(up));  // explored after the floor branch
    node.extra.push_back(lo);
    stack.push_back(std::move(node));
  }

  if (!best) {
    LpSolution infeasible;
    infeasible.status = LpStatus::infeasible;
    return infeasible;
  }
  return *best;
}

}  // namespace oadiff
