// ---------------------------------------------------------------------------
// lp_symmetry.cpp -- orbit aggregation for symmetric models.
//
// When a permutation group maps a model onto itself (constraint system and
// objective both invariant), the optimum is attained on the fixed subspace
// where all variables of an orbit agree; averaging any optimal point over
// the group keeps it feasible and optimal by convexity.  Solving the
// collapsed model with one variable per orbit is therefore exact, and
// shrinks e.g. the 3125-variable gamma(5, *, *) programs to under a hundred
// variables.
// ---------------------------------------------------------------------------
#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "oadiff/errors.hpp"
#include "oadiff/lp.hpp"

namespace oadiff {

namespace {

// Permutation of the variable indices induced by remapping each P/Q word
// through `word_map`; roles and non-word variables (R) stay in place.
std::vector<int> var_permutation(
    const LpModel& model, const std::function<Word(const Word&)>& word_map) {
  std::map<std::pair<int, Word>, int> index_of;
  for (std::size_t i = 0; i < model.vars.size(); ++i) {
    const VarRole role = model.vars[i].role;
    if (role == VarRole::P || role == VarRole::Q) {
      index_of[{static_cast<int>(role), model.vars[i].word}] =
          static_cast<int>(i);
    }
  }
  std::vector<int> perm(model.vars.size());
  for (std::size_t i = 0; i < model.vars.size(); ++i) {
    const VarRole role = model.vars[i].role;
    if (role != VarRole::P && role != VarRole::Q) {
      perm[i] = static_cast<int>(i);
      continue;
    }
    auto it = index_of.find(
        {static_cast<int>(role), word_map(model.vars[i].word)});
    if (it == index_of.end()) {
      fail("Internal", "symmetry does not preserve the variable support");
    }
    perm[i] = it->second;
  }
  return perm;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<int>> model_symmetry_generators(const LpModel& model) {
  std::vector<std::vector<int>> generators;
  switch (model.kind) {
    case ModelKind::rho: {
      // Adjacent column transpositions and 0-fixing adjacent symbol
      // transpositions; both permute the margin system and fix P(0) and R.
      for (int c = 0; c + 1 < model.nu; ++c) {
        generators.push_back(var_permutation(model, [&](const Word& u) {
          Word v = u;
          std::swap(v[c], v[c + 1]);
          return v;
        }));
      }
      for (int s = 1; s + 1 < model.q; ++s) {
        generators.push_back(var_permutation(model, [&](const Word& u) {
          Word v = u;
          for (int& x : v) {
            if (x == s) {
              x = s + 1;
            } else if (x == s + 1) {
              x = s;
            }
          }
          return v;
        }));
      }
      break;
    }
    case ModelKind::gamma: {
      // Simultaneous conjugation u'_i = tau(u_{tau(i)}) by adjacent
      // transpositions tau: preserves the identity word, the number of
      // distinct symbols, and the margin system as a whole.
      for (int j = 0; j + 1 < model.q; ++j) {
        generators.push_back(var_permutation(model, [&](const Word& u) {
          auto tau = [&](int x) {
            return x == j ? j + 1 : x == j + 1 ? j : x;
          };
          Word v(u.size());
          for (std::size_t i = 0; i < u.size(); ++i) {
            v[i] = tau(u[tau(static_cast<int>(i))]);
          }
          return v;
        }));
      }
      break;
    }
    case ModelKind::gamma_E: {
      // The variables are shift-class representatives (first symbol 0).
      // Rotating the columns, and reversing them while negating the
      // symbols, both fix the identity-word class, preserve the number
      // of distinct symbols, and permute the per-window shift-class
      // margins; normalizing back to the representative keeps the map
      // inside the variable support.  Together they generate a dihedral
      // group of order 2q.
      const int q = model.q;
      auto normalize = [q](const Word& u) {
        return shift_word(u, (q - u[0]) % q, q);
      };
      generators.push_back(var_permutation(model, [&](const Word& u) {
        Word v(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
          v[i] = u[(i + 1) % u.size()];
        }
        return normalize(v);
      }));
      generators.push_back(var_permutation(model, [&](const Word& u) {
        Word v(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
          v[i] = (q - u[u.size() - 1 - i]) % q;
        }
        return normalize(v);
      }));
      break;
    }
    case ModelKind::delta:
    case ModelKind::bar_delta: {
      // Coordinate transpositions: weight and the all-ones word are
      // invariant.
      for (int c = 0; c + 1 < model.nu; ++c) {
        generators.push_back(var_permutation(model, [&](const Word& u) {
          Word v = u;
          std::swap(v[c], v[c + 1]);
          return v;
        }));
      }
      break;
    }
    default:
      break;  // no safe group registered
  }
  return generators;
}

LpSolution solve_with_symmetry(
    const LpModel& model, const std::vector<std::vector<int>>& generators) {
  const std::size_t n = model.vars.size();
  UnionFind uf(n);
  for (const std::vector<int>& gen : generators) {
    if (gen.size() != n) fail("BadArgs", "generator of wrong length");
    for (std::size_t i = 0; i < n; ++i) uf.unite(static_cast<int>(i), gen[i]);
  }

  // Orbit index per variable; representatives in ascending index order.
  std::vector<int> orbit(n, -1);
  LpModel reduced;
  reduced.maximize = model.maximize;
  for (std::size_t i = 0; i < n; ++i) {
    const int root = uf.find(static_cast<int>(i));
    if (orbit[root] == -1) {
      orbit[root] = reduced.add_var(model.vars[root]);
    }
    orbit[i] = orbit[root];
  }

  auto aggregate = [&](const std::vector<std::pair<int, Rational>>& terms) {
    std::map<int, Rational> acc;
    for (const auto& [var, coef] : terms) acc[orbit[var]] += coef;
    std::vector<std::pair<int, Rational>> out;
    for (auto& [var, coef] : acc) {
      if (coef != 0) out.push_back({var, coef});
    }
    return out;
  };

  std::unordered_set<std::string> seen;
  for (const LpConstraint& c : model.cons) {
    LpConstraint folded{aggregate(c.terms), c.rel, c.rhs};
    std::string key = std::to_string(static_cast<int>(folded.rel)) + "|" +
                      rational_str(folded.rhs);
    for (const auto& [var, coef] : folded.terms) {
      key += "|" + std::to_string(var) + ":" + rational_str(coef);
    }
    if (seen.insert(std::move(key)).second) {
      reduced.cons.push_back(std::move(folded));
    }
  }
  reduced.objective = aggregate(model.objective);

  LpSolution folded = solve_lp(reduced);
  if (folded.status != LpStatus::optimal) return folded;

  LpSolution expanded;
  expanded.status = LpStatus::optimal;
  expanded.value = folded.value;
  expanded.assignment.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    expanded.assignment[i] = folded.assignment[orbit[i]];
  }
  return expanded;
}

LpSolution solve_model(const LpModel& model) {
  bool any_integral = false;
  for (const LpVariable& v : model.vars) any_integral |= v.integral;

  if (any_integral) {
    IlpOptions options;
    switch (model.kind) {
      case ModelKind::F: {
        // The full factorial array is feasible with R = q^nu.
        Rational hint = 1;
        for (int i = 0; i < model.nu; ++i) hint *= model.q;
        options.objective_hint = hint;
        break;
      }
      case ModelKind::E: {
        // The first-coordinate-0 slice of the full factorial is feasible
        // with R = q^{nu-1}.
        Rational hint = 1;
        for (int i = 0; i + 1 < model.nu; ++i) hint *= model.q;
        options.objective_hint = hint;
        break;
      }
      case ModelKind::R_star:
        // Every feasible point has P(0) >= R / q^nu >= ... >= 1.
        options.objective_hint = Rational(1);
        break;
      default:
        break;
    }
    return solve_ilp(model, options);
  }

  const std::vector<std::vector<int>> generators =
      model_symmetry_generators(model);
  if (!generators.empty() && model.vars.size() > 600) {
    return solve_with_symmetry(model, generators);
  }
  return solve_lp(model);
}

}  // namespace oadiff
