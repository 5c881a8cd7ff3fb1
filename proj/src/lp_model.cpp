// ---------------------------------------------------------------------------
// lp_model.cpp -- transcription of the design-existence linear programs and
// witness extraction from optimal frequency vectors.
// ---------------------------------------------------------------------------
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oadiff/budget.hpp"
#include "oadiff/errors.hpp"
#include "oadiff/lp.hpp"

namespace oadiff {

namespace {

std::string word_name(const char* prefix, const Word& w) {
  std::string name = prefix;
  name += ':';
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) name += ',';
    name += std::to_string(w[j]);
  }
  return name;
}

Word project(const Word& u, const std::vector<int>& J) {
  Word v(J.size());
  for (std::size_t i = 0; i < J.size(); ++i) v[i] = u[J[i]];
  return v;
}

// Representative of the uniform-shift class: shift so the first entry is 0.
Word class_rep(const Word& v, int q) {
  return shift_word(v, (q - v[0]) % q, q);
}

int word_weight(const Word& w) {
  int s = 0;
  for (int x : w) s += x;
  return s;
}

Rational q_power(int q, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

// Shared core of the frequency models: P variables over the word space
// (full, or first-coordinate-0 for the shift-class variants), a row-count
// variable R, the total-mass row, the zero-row dominance rows, and the
// uniformity margins (plain t-margins, or shift-class margins).
LpModel frequency_base(int nu, int q, int t, bool shift_class) {
  if (q < 2 || nu < 1 || t < 1 || t > nu) {
    fail("BadArgs", "need q >= 2 and 1 <= t <= nu");
  }
  word_space_size(q, nu, lp_budget());

  LpModel model;
  model.q = q;
  model.nu = nu;
  model.strength = t;

  Word u(nu, 0);
  do {
    if (shift_class && u[0] != 0) break;  // lexicographic: all 0-led first
    model.add_var({word_name("P", u), VarRole::P, u, false});
  } while (next_word(u, q));
  const int n_p = static_cast<int>(model.vars.size());
  const int r_var = model.add_var({"R", VarRole::R, {}, false});

  LpConstraint total;
  for (int i = 0; i < n_p; ++i) total.terms.push_back({i, Rational(1)});
  total.terms.push_back({r_var, Rational(-1)});
  total.rel = Rel::eq;
  total.rhs = 0;
  model.cons.push_back(std::move(total));

  const Word zero(nu, 0);
  const int zero_var = model.var_by_name(word_name("P", zero));
  for (int i = 0; i < n_p; ++i) {
    if (i == zero_var) continue;
    model.cons.push_back({{{zero_var, Rational(1)}, {i, Rational(-1)}},
                          Rel::ge,
                          Rational(0)});
  }

  const Rational margin_coef =
      -1 / q_power(q, shift_class ? t - 1 : t);
  for_each_combination(nu, t, [&](const std::vector<int>& J) {
    std::map<Word, int> row_of;  // margin word/class -> constraint index
    const std::size_t first = model.cons.size();
    for (int i = 0; i < n_p; ++i) {
      Word v = project(model.vars[i].word, J);
      if (shift_class) v = class_rep(v, q);
      auto [it, inserted] = row_of.try_emplace(
          v, static_cast<int>(model.cons.size()));
      if (inserted) {
        model.cons.push_back({{{r_var, margin_coef}}, Rel::eq, Rational(0)});
      }
      model.cons[it->second].terms.push_back({i, Rational(1)});
    }
    const std::size_t expected = shift_class
                                     ? word_space_size(q, t - 1)
                                     : word_space_size(q, t);
    if (model.cons.size() - first != expected) {
      fail("Internal", "unexpected margin class count");
    }
  });

  model.objective = {{zero_var, Rational(1)}};
  model.maximize = true;
  return model;
}

void make_integral(LpModel& model) {
  for (LpVariable& v : model.vars) v.integral = true;
}

void add_r_bound(LpModel& model, Rel rel, const Rational& rhs) {
  const int r_var = model.var_by_name("R");
  model.cons.push_back({{{r_var, Rational(1)}}, rel, rhs});
}

Word identity_word(int q) {
  Word w(q);
  for (int i = 0; i < q; ++i) w[i] = i;
  return w;
}

// Shared core of the pair models: P variables over the admissible support,
// Q variables over the target support, unit total mass on P, and per-window
// margin equalities P-side minus Q-side.
LpModel pair_base(int q, int nu, int k, bool shift_class,
                  const std::function<bool(const Word&)>& p_admits,
                  const std::function<bool(const Word&)>& q_admits) {
  word_space_size(q, nu, lp_budget());

  LpModel model;
  model.q = q;
  model.nu = nu;
  model.strength = k;

  Word u(nu, 0);
  do {
    if (!shift_class || u[0] == 0) {
      if (p_admits(u)) model.add_var({word_name("P", u), VarRole::P, u, false});
    }
  } while (next_word(u, q));
  const int n_p = static_cast<int>(model.vars.size());
  u.assign(nu, 0);
  do {
    if (!shift_class || u[0] == 0) {
      if (q_admits(u)) model.add_var({word_name("Q", u), VarRole::Q, u, false});
    }
  } while (next_word(u, q));
  const int n_total = static_cast<int>(model.vars.size());

  LpConstraint total;
  for (int i = 0; i < n_p; ++i) total.terms.push_back({i, Rational(1)});
  total.rel = Rel::eq;
  total.rhs = 1;
  model.cons.push_back(std::move(total));

  for_each_combination(nu, k, [&](const std::vector<int>& J) {
    std::map<Word, int> row_of;
    for (int i = 0; i < n_total; ++i) {
      Word v = project(model.vars[i].word, J);
      if (shift_class) v = class_rep(v, q);
      auto [it, inserted] = row_of.try_emplace(
          v, static_cast<int>(model.cons.size()));
      if (inserted) model.cons.push_back({{}, Rel::eq, Rational(0)});
      model.cons[it->second].terms.push_back(
          {i, Rational(model.vars[i].role == VarRole::P ? 1 : -1)});
    }
  });

  model.maximize = true;
  return model;
}

}  // namespace

LpModel model_rho(int nu, int q, int t) {
  LpModel model = frequency_base(nu, q, t, false);
  model.kind = ModelKind::rho;
  add_r_bound(model, Rel::eq, 1);
  return model;
}

LpModel model_rho_E(int nu, int q, int t) {
  LpModel model = frequency_base(nu, q, t, true);
  model.kind = ModelKind::rho_E;
  add_r_bound(model, Rel::eq, 1);
  return model;
}

LpModel model_F(int nu, int q, int t) {
  LpModel model = frequency_base(nu, q, t, false);
  model.kind = ModelKind::F;
  add_r_bound(model, Rel::ge, 1);
  make_integral(model);
  model.maximize = false;
  model.objective = {{model.var_by_name("R"), Rational(1)}};
  return model;
}

LpModel model_E(int nu, int q, int t) {
  LpModel model = frequency_base(nu, q, t, true);
  model.kind = ModelKind::E;
  add_r_bound(model, Rel::ge, 1);
  make_integral(model);
  model.maximize = false;
  model.objective = {{model.var_by_name("R"), Rational(1)}};
  return model;
}

LpModel model_R_min(int nu, int q, int t, const Rational& rho) {
  if (rho <= 0 || rho > 1) fail("BadArgs", "rho must lie in (0, 1]");
  LpModel model = frequency_base(nu, q, t, false);
  model.kind = ModelKind::R_min;
  add_r_bound(model, Rel::ge, 1);
  const int zero_var = model.var_by_name(word_name("P", Word(nu, 0)));
  model.cons.push_back({{{zero_var, Rational(1)},
                         {model.var_by_name("R"), -rho}},
                        Rel::ge,
                        Rational(0)});
  make_integral(model);
  model.maximize = false;
  model.objective = {{model.var_by_name("R"), Rational(1)}};
  return model;
}

LpModel model_R_star(int nu, int q, int t, long F_value) {
  if (F_value < 1) fail("BadArgs", "F must be at least 1");
  LpModel model = frequency_base(nu, q, t, false);
  model.kind = ModelKind::R_star;
  add_r_bound(model, Rel::eq, Rational(F_value));
  make_integral(model);
  return model;
}

LpModel model_gamma(int q, int p, int k) {
  if (q < 2 || k < 1 || k > p || p > q) {
    fail("BadArgs", "need q >= 2 and 1 <= k <= p <= q");
  }
  LpModel model = pair_base(
      q, q, k, false,
      [&](const Word& u) { return distinct_symbols(u) <= p; },
      [](const Word&) { return true; });
  model.kind = ModelKind::gamma;
  model.p_or_d = p;
  model.objective = {
      {model.var_by_name(word_name("Q", identity_word(q))), Rational(1)}};
  return model;
}

LpModel model_gamma_E(int q, int p, int k) {
  if (q < 2 || k < 1 || k > p || p > q) {
    fail("BadArgs", "need q >= 2 and 1 <= k <= p <= q");
  }
  LpModel model = pair_base(
      q, q, k, true,
      [&](const Word& u) { return distinct_symbols(u) <= p; },
      [](const Word&) { return true; });
  model.kind = ModelKind::gamma_E;
  model.p_or_d = p;
  model.objective = {
      {model.var_by_name(word_name("Q", identity_word(q))), Rational(1)}};
  return model;
}

LpModel model_delta(int n, int d, int k) {
  if (n < 1 || k < 1 || k > d || d > n) {
    fail("BadArgs", "need 1 <= k <= d <= n");
  }
  LpModel model = pair_base(
      2, n, k, false,
      [&](const Word& u) { return word_weight(u) <= d; },
      [](const Word&) { return true; });
  model.kind = ModelKind::delta;
  model.p_or_d = d;
  model.objective = {
      {model.var_by_name(word_name("Q", Word(n, 1))), Rational(1)}};
  return model;
}

LpModel model_bar_delta(int n, int d, int k) {
  if (n < 1 || k < 1 || k > d || d > n) {
    fail("BadArgs", "need 1 <= k <= d <= n");
  }
  LpModel model = pair_base(
      2, n, k, false,
      [&](const Word& u) { return word_weight(u) <= d; },
      [&](const Word& u) {
        const int w = word_weight(u);
        return w == n || w <= d;
      });
  model.kind = ModelKind::bar_delta;
  model.p_or_d = d;
  model.objective = {
      {model.var_by_name(word_name("Q", Word(n, 1))), Rational(1)}};
  return model;
}

Integer common_scale(const LpModel& model, const LpSolution& solution) {
  if (solution.assignment.size() != model.vars.size()) {
    fail("BadArgs", "solution does not match the model");
  }
  Integer scale = 1;
  for (std::size_t i = 0; i < model.vars.size(); ++i) {
    const VarRole role = model.vars[i].role;
    if (role != VarRole::P && role != VarRole::Q) continue;
    Integer den = solution.assignment[i].get_den();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  return scale;
}

Witness extract_witness(const LpModel& model, const LpSolution& solution,
                        const Integer& scale) {
  if (solution.status != LpStatus::optimal) {
    fail("BadArgs", "witness extraction needs an optimal solution");
  }
  if (solution.assignment.size() != model.vars.size()) {
    fail("BadArgs", "solution does not match the model");
  }
  if (scale < 1) fail("BadArgs", "scale must be a positive integer");

  auto multiplicity = [&](std::size_t i) -> long {
    Rational scaled = solution.assignment[i] * Rational(scale);
    if (!is_integral(scaled) || scaled < 0) {
      fail("NonIntegerAfterScale",
           "variable " + model.vars[i].name + " scales to " +
               rational_str(scaled));
    }
    Integer count = scaled.get_num();
    if (!count.fits_slong_p()) {
      fail("Budget", "scaled multiplicity does not fit a machine integer");
    }
    return count.get_si();
  };

  Witness witness;
  switch (model.kind) {
    case ModelKind::rho:
    case ModelKind::rho_E:
    case ModelKind::F:
    case ModelKind::E:
    case ModelKind::R_min:
    case ModelKind::R_star: {
      witness.is_pair = false;
      witness.array.q = model.q;
      witness.array.nu = model.nu;
      for (std::size_t i = 0; i < model.vars.size(); ++i) {
        if (model.vars[i].role != VarRole::P) continue;
        const long count = multiplicity(i);
        for (long r = 0; r < count; ++r) {
          witness.array.rows.push_back(model.vars[i].word);
        }
      }
      if (witness.array.rows.empty()) {
        fail("EmptyArray", "the scaled solution has no rows");
      }
      return witness;
    }
    case ModelKind::gamma:
    case ModelKind::gamma_E:
    case ModelKind::delta:
    case ModelKind::bar_delta: {
      witness.is_pair = true;
      witness.pair.psi.q = witness.pair.phi.q = model.q;
      witness.pair.psi.nu = witness.pair.phi.nu = model.nu;
      for (std::size_t i = 0; i < model.vars.size(); ++i) {
        const VarRole role = model.vars[i].role;
        if (role != VarRole::P && role != VarRole::Q) continue;
        const long count = multiplicity(i);
        SymbolArray& side =
            role == VarRole::P ? witness.pair.psi : witness.pair.phi;
        for (long r = 0; r < count; ++r) {
          side.rows.push_back(model.vars[i].word);
        }
      }
      if (witness.pair.psi.rows.empty() || witness.pair.phi.rows.empty()) {
        fail("EmptyArray", "the scaled solution has an empty side");
      }
      return witness;
    }
    case ModelKind::generic:
      break;
  }
  fail("BadArgs", "witness extraction is only defined for the named models");
}

}  // namespace oadiff
