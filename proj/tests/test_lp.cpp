#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oadiff/arpa.hpp"
#include "oadiff/designs.hpp"
#include "oadiff/lp.hpp"
#include "test_util.hpp"

using namespace oadiff;
using testutil::r;
using testutil::thrown_code;

namespace {

// Value of the model, using orbit aggregation whenever a group is known.
Rational value_of(const LpModel& model) {
  const auto generators = model_symmetry_generators(model);
  LpSolution solution = generators.empty()
                            ? solve_model(model)
                            : solve_with_symmetry(model, generators);
  REQUIRE(solution.status == LpStatus::optimal);
  return solution.value;
}

LpModel tiny_model(const Rational& bound, bool integral) {
  LpModel model;
  model.add_var({"x", VarRole::generic, {}, integral});
  model.cons.push_back({{{0, Rational(1)}}, Rel::le, bound});
  model.maximize = true;
  model.objective = {{0, Rational(1)}};
  return model;
}

}  // namespace

TEST_CASE("solve_lp basics") {
  LpSolution s = solve_lp(tiny_model(r(3, 7), false));
  CHECK(s.status == LpStatus::optimal);
  CHECK(s.value == r(3, 7));

  // x >= 0 conflicts with x <= -1.
  LpModel infeasible = tiny_model(r(-1), false);
  CHECK(solve_lp(infeasible).status == LpStatus::infeasible);

  // No upper bound on a maximized variable.
  LpModel unbounded;
  unbounded.add_var({"x", VarRole::generic, {}, false});
  unbounded.maximize = true;
  unbounded.objective = {{0, Rational(1)}};
  CHECK(solve_lp(unbounded).status == LpStatus::unbounded);
  unbounded.maximize = false;
  LpSolution zero = solve_lp(unbounded);
  CHECK(zero.status == LpStatus::optimal);
  CHECK(zero.value == 0);

  // Equality constraints pass through the two-phase machinery.
  LpModel eq;
  eq.add_var({"x", VarRole::generic, {}, false});
  eq.add_var({"y", VarRole::generic, {}, false});
  eq.cons.push_back({{{0, Rational(1)}, {1, Rational(2)}}, Rel::eq, r(5)});
  eq.cons.push_back({{{0, Rational(1)}}, Rel::ge, r(1)});
  eq.maximize = false;
  eq.objective = {{0, Rational(3)}, {1, Rational(1)}};
  LpSolution es = solve_lp(eq);
  CHECK(es.status == LpStatus::optimal);
  CHECK(es.value == r(5));  // x = 1, y = 2

  CHECK(thrown_code([&] { solve_lp(tiny_model(r(1), true)); }) == "BadArgs");
}

TEST_CASE("solve_ilp basics") {
  LpSolution s = solve_ilp(tiny_model(r(7, 2), true));
  CHECK(s.status == LpStatus::optimal);
  CHECK(s.value == 3);

  CHECK(thrown_code([&] { solve_ilp(tiny_model(r(1), false)); }) == "BadArgs");

  IlpOptions strict;
  strict.node_limit = 0;
  CHECK(thrown_code([&] { solve_ilp(tiny_model(r(7, 2), true), strict); }) ==
        "Budget");

  LpModel infeasible = tiny_model(r(-1), true);
  CHECK(solve_ilp(infeasible).status == LpStatus::infeasible);
}

TEST_CASE("frequency-model optima") {
  CHECK(value_of(model_rho(3, 2, 2)) == r(1, 4));
  CHECK(value_of(model_rho(4, 2, 2)) == r(1, 6));
  CHECK(value_of(model_rho(3, 3, 2)) == r(1, 9));
  CHECK(value_of(model_rho(4, 3, 2)) == r(1, 9));
  CHECK(value_of(model_rho_E(3, 3, 2)) == r(1, 3));
  CHECK(value_of(model_rho_E(4, 3, 2)) == r(1, 5));

  CHECK(solve_model(model_F(2, 2, 2)).value == 4);
  CHECK(solve_model(model_F(3, 3, 2)).value == 9);
  CHECK(solve_model(model_E(3, 3, 2)).value == 3);

  CHECK(solve_model(model_R_min(3, 2, 2, r(1, 4))).value == 4);
  CHECK(solve_model(model_R_star(3, 2, 2, 4)).value == 1);

  CHECK(thrown_code([] { model_rho(3, 2, 4); }) == "BadArgs");
  CHECK(thrown_code([] { model_rho(0, 2, 1); }) == "BadArgs");
  CHECK(thrown_code([] { model_rho(21, 2, 2); }) == "Budget");
}

TEST_CASE("pair-model optima") {
  CHECK(value_of(model_gamma(3, 2, 2)) == r(1, 4));
  CHECK(value_of(model_gamma(4, 2, 2)) == r(1, 9));
  CHECK(value_of(model_gamma(4, 3, 2)) == r(1, 3));

  CHECK(value_of(model_gamma_E(3, 2, 2)) == r(1, 3));
  CHECK(value_of(model_gamma_E(4, 2, 2)) == r(1, 4));
  CHECK(value_of(model_gamma_E(4, 3, 2)) == r(1, 2));

  CHECK(value_of(model_delta(3, 2, 2)) == r(1, 4));
  for (int n = 2; n <= 4; ++n) {
    CHECK(value_of(model_delta(n, n, 2)) == 1);
  }
  CHECK(value_of(model_bar_delta(4, 2, 2)) <= value_of(model_delta(4, 2, 2)));

  // gamma(q, k, k) is at least 2 / (T(q, k) + 1), with equality here.
  for (int q = 3; q <= 5; ++q) {
    const Rational lower = Rational(2) / Rational(t_number(q, 2) + 1);
    CHECK(value_of(model_gamma(q, 2, 2)) >= lower);
  }

  CHECK(thrown_code([] { model_gamma(3, 4, 2); }) == "BadArgs");
  CHECK(thrown_code([] { model_delta(3, 2, 3); }) == "BadArgs");
}

TEST_CASE("orbit aggregation agrees with the plain simplex") {
  for (const LpModel& model :
       {model_rho(3, 2, 2), model_rho(3, 3, 2), model_gamma(3, 2, 2),
        model_gamma(4, 3, 2), model_gamma_E(4, 2, 2), model_gamma_E(4, 3, 2),
        model_delta(4, 2, 2)}) {
    const auto generators = model_symmetry_generators(model);
    REQUIRE_FALSE(generators.empty());
    LpSolution plain = solve_lp(model);
    LpSolution folded = solve_with_symmetry(model, generators);
    REQUIRE(plain.status == LpStatus::optimal);
    REQUIRE(folded.status == LpStatus::optimal);
    CHECK(plain.value == folded.value);

    // The folded assignment is feasible for the original model.
    for (const LpConstraint& c : model.cons) {
      Rational lhs = 0;
      for (const auto& [var, coef] : c.terms) {
        lhs += coef * folded.assignment[var];
      }
      switch (c.rel) {
        case Rel::le:
          CHECK(lhs <= c.rhs);
          break;
        case Rel::eq:
          CHECK(lhs == c.rhs);
          break;
        case Rel::ge:
          CHECK(lhs >= c.rhs);
          break;
      }
    }
  }
}

TEST_CASE("witness extraction") {
  // rho(3,3,2): scaling by 9 gives a 9-row strength-2 array.
  LpModel rho_model = model_rho(3, 3, 2);
  LpSolution rho_sol = solve_lp(rho_model);
  Integer scale = common_scale(rho_model, rho_sol);
  Witness rho_wit = extract_witness(rho_model, rho_sol, scale);
  REQUIRE_FALSE(rho_wit.is_pair);
  CHECK(is_orthogonal_array(rho_wit.array, 2));
  CHECK(max_frequency(rho_wit.array, FrequencyMode::plain).second == r(1, 9));

  // rho_E(3,3,2): the witness is a difference scheme with class share 1/3.
  LpModel ds_model = model_rho_E(3, 3, 2);
  LpSolution ds_sol = solve_lp(ds_model);
  Witness ds_wit =
      extract_witness(ds_model, ds_sol, common_scale(ds_model, ds_sol));
  CHECK(is_difference_scheme(ds_wit.array, 2));
  CHECK(max_frequency(ds_wit.array, FrequencyMode::shift_class).second ==
        r(1, 3));

  // F(2,2,2): integral solution, scale 1, a 4-row strength-2 array.
  LpModel f_model = model_F(2, 2, 2);
  LpSolution f_sol = solve_model(f_model);
  CHECK(common_scale(f_model, f_sol) == 1);
  Witness f_wit = extract_witness(f_model, f_sol, 1);
  CHECK(f_wit.array.row_count() == 4);
  CHECK(is_orthogonal_array(f_wit.array, 2));

  // gamma(4,3,2): the witness pair certifies the ratio 1/3.
  LpModel g_model = model_gamma(4, 3, 2);
  LpSolution g_sol = solve_lp(g_model);
  Witness g_wit =
      extract_witness(g_model, g_sol, common_scale(g_model, g_sol));
  REQUIRE(g_wit.is_pair);
  PairCertificate cert = verify_arpa(g_wit.pair, 4, 3, 2);
  CHECK(Rational(Integer(cert.R_star)) / Rational(Integer(cert.R)) ==
        r(1, 3));

  // delta(3,2,2): the witness pair is a cover pair.
  LpModel d_model = model_delta(3, 2, 2);
  LpSolution d_sol = solve_lp(d_model);
  Witness d_wit =
      extract_witness(d_model, d_sol, common_scale(d_model, d_sol));
  PairCertificate d_cert = verify_cpa(d_wit.pair, 3, 2, 2);
  CHECK(Rational(Integer(d_cert.R_star)) / Rational(Integer(d_cert.R)) ==
        r(1, 4));

  // Scale 1 on a fractional optimum cannot produce multiplicities.
  CHECK(thrown_code([&] { extract_witness(rho_model, rho_sol, 1); }) ==
        "NonIntegerAfterScale");
}

TEST_CASE("two-variable-strength laws across solved models") {
  auto rho = [](int nu, int q, int t) {
    return value_of(model_rho(nu, q, t));
  };
  auto rho_E = [](int nu, int q, int t) {
    return value_of(model_rho_E(nu, q, t));
  };

  // Chain: rho_E(nu,q,t) >= rho(nu-1,q,t) >= q rho(nu,q,t+1)
  //        >= rho_E(nu,q,t+1); equalities throughout for q = 2, t even.
  for (auto [nu, q, t] : std::vector<std::array<int, 3>>{
           {4, 2, 2}, {5, 2, 2}, {3, 3, 1}, {4, 3, 1}}) {
    const Rational a = rho_E(nu, q, t);
    const Rational b = rho(nu - 1, q, t);
    const Rational c = q * rho(nu, q, t + 1);
    const Rational d = rho_E(nu, q, t + 1);
    CHECK(a >= b);
    CHECK(b >= c);
    CHECK(c >= d);
    if (q == 2 && t % 2 == 0) {
      CHECK(a == b);
      CHECK(b == c);
      CHECK(c == d);
    }
  }

  // Closed forms for strength 2.
  for (int nu = 3; nu <= 7; ++nu) {
    const Rational v = rho(nu, 2, 2);
    const long expected = nu % 2 == 1 ? nu + 1 : nu + 2;
    CHECK(v == Rational(1, static_cast<unsigned long>(expected)));
  }
  for (int nu : {3, 4, 6, 7}) {
    const Rational v = rho(nu, 3, 2);
    const long expected = nu % 3 == 1 ? 2 * nu + 1 : 2 * nu + 3;
    CHECK(v == Rational(1, static_cast<unsigned long>(expected)));
  }

  // Closed forms for binary strength 3.
  for (int nu = 3; nu <= 6; ++nu) {
    const Rational v = rho(nu, 2, 3);
    const long expected = nu % 2 == 0 ? 2 * nu : 2 * (nu + 1);
    CHECK(v == Rational(1, static_cast<unsigned long>(expected)));
  }
}
