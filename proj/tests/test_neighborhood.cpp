#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oadiff/neighborhood.hpp"
#include "test_util.hpp"

using namespace oadiff;
using testutil::r;
using testutil::thrown_code;
using testutil::w;

namespace {

bool improves(const CspInstance& instance, const Rational& candidate,
              const Rational& incumbent) {
  return instance.goal == Goal::max ? candidate > incumbent
                                    : candidate < incumbent;
}

}  // namespace

TEST_CASE("ball_members and ball_size") {
  BallSpec zero{w("010"), 0, ShiftMode::none};
  CHECK(ball_members(zero, 2) == std::vector<Word>{w("010")});

  BallSpec one{w("000"), 1, ShiftMode::none};
  std::vector<Word> b1 = ball_members(one, 2);
  CHECK(b1 == std::vector<Word>{w("000"), w("001"), w("010"), w("100")});

  // Cardinality matches the closed form, members are unique and sorted.
  for (int n = 1; n <= 4; ++n) {
    for (int q = 2; q <= 3; ++q) {
      Word center(n);
      for (int j = 0; j < n; ++j) center[j] = j % q;
      for (int d = 0; d <= n; ++d) {
        std::vector<Word> members =
            ball_members({center, d, ShiftMode::none}, q);
        CHECK(Integer(static_cast<long>(members.size())) ==
              ball_size(n, q, d));
        CHECK(std::is_sorted(members.begin(), members.end()));
        CHECK(std::set<Word>(members.begin(), members.end()).size() ==
              members.size());
        for (const Word& y : members) {
          int dist = 0;
          for (int j = 0; j < n; ++j) dist += y[j] != center[j];
          CHECK(dist <= d);
        }
      }
    }
  }
  CHECK(ball_size(3, 2, 1) == 4);
  CHECK(ball_size(3, 2, 3) == 8);
  CHECK(ball_size(4, 3, 2) == 33);

  // Shift closure at radius zero is exactly the q uniform shifts.
  std::vector<Word> shifts =
      ball_members({w("01"), 0, ShiftMode::all_uniform_shifts}, 3);
  CHECK(shifts == std::vector<Word>{w("01"), w("12"), w("20")});

  CHECK(thrown_code([] {
          ball_members({w("00"), -1, ShiftMode::none}, 2);
        }) == "BadRadius");
  CHECK(thrown_code([] {
          ball_members({w("00"), 3, ShiftMode::none}, 2);
        }) == "BadRadius");
  CHECK(thrown_code([] {
          ball_members({w("02"), 1, ShiftMode::none}, 2);
        }) == "SymbolOutOfRange");
  CHECK(thrown_code([] {
          ball_members({Word(30, 0), 30, ShiftMode::none}, 2);
        }) == "Budget");
}

TEST_CASE("local_search reaches radius-1 local optima") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    CspInstance instance = gen_e2lin2(8, 12, seed);
    Word x = local_search(instance, Word(8, 0), Neighborhood::B1);
    const Rational value = evaluate(instance, x);

    // No single-coordinate change improves.
    for (const Word& y : ball_members({x, 1, ShiftMode::none}, 2)) {
      CHECK_FALSE(improves(instance, evaluate(instance, y), value));
    }

    // Parity constraints: a radius-1 local optimum is at least average.
    OracleReport oracle = brute_force(instance);
    CHECK(value >= oracle.mean);
  }

  // Shift-closed search on a larger alphabet.
  CspInstance rnd = gen_random(3, 2, 5, 7, 3);
  Word x = local_search(rnd, Word(5, 0), Neighborhood::tildeB1);
  const Rational value = evaluate(rnd, x);
  for (const Word& y :
       ball_members({x, 1, ShiftMode::all_uniform_shifts}, 3)) {
    CHECK_FALSE(improves(rnd, evaluate(rnd, y), value));
  }

  // Starting at an optimum returns it unchanged.
  OracleReport oracle = brute_force(rnd);
  CHECK(local_search(rnd, oracle.argopt, Neighborhood::B1) == oracle.argopt);
}

TEST_CASE("radius-1 neighbor-sum identity for binary parity instances") {
  // For arity-2 parity constraints over two symbols:
  //   sum_{y in B^1(x), y != x} v(y) = 4 * mean + (n - 4) * v(x).
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const int n = 6;
    CspInstance instance = gen_e2lin2(n, 9, 100 + seed);
    const Rational mean = brute_force(instance).mean;

    std::vector<Word> points;
    local_search(instance, Word(n, 0), Neighborhood::B1,
                 [&](const Word& y) { points.push_back(y); });
    REQUIRE_FALSE(points.empty());
    points.push_back(w("010101"));

    for (const Word& x : points) {
      Rational total = 0;
      for (const Word& y : ball_members({x, 1, ShiftMode::none}, 2)) {
        if (y != x) total += evaluate(instance, y);
      }
      CHECK(total == 4 * mean + (n - 4) * evaluate(instance, x));
    }
  }
}

TEST_CASE("best_in_ball") {
  // All-zeros pair constraints, centered at the all-ones word: within
  // radius 2 only one constraint can be satisfied.
  CspInstance j = gen_J_qkn(2, 2, 4);
  OracleReport oracle = brute_force(j);
  CHECK(oracle.opt == 6);
  CHECK(oracle.wor == 0);

  auto [best2, value2] = best_in_ball(j, {Word(4, 1), 2, ShiftMode::none});
  CHECK(value2 == 1);
  auto ratio = differential_ratio(oracle, value2);
  REQUIRE(ratio.has_value());
  CHECK(*ratio == r(1, 6));
  // Cover-pair guarantee: ratio at least 2 * k! / (2n - k)^k.
  CHECK(*ratio >= r(2 * 2, 6 * 6));

  // Radius n reaches the global optimum.
  auto [best4, value4] = best_in_ball(j, {Word(4, 1), 4, ShiftMode::none});
  CHECK(value4 == oracle.opt);
  CHECK(best4 == oracle.argopt);

  // Ties resolve to the lexicographically smallest member.
  CspInstance constant;
  constant.q = 2;
  constant.n = 2;
  Constraint c;
  c.support = {0};
  c.table = ConstraintTable{2, 1, {r(1), r(1)}};
  constant.constraints.push_back(c);
  auto [tie, tie_value] = best_in_ball(constant, {w("11"), 1,
                                                  ShiftMode::none});
  CHECK(tie == w("01"));
  CHECK(tie_value == 1);
}

TEST_CASE("ball_diameter_spread") {
  CspInstance j = gen_J_qkn(2, 2, 4);

  // The full-radius ball spans the whole diameter.
  CHECK(ball_diameter_spread(j, {Word(4, 1), 4, ShiftMode::none}) == 1);

  // Radius-k ball at the all-ones center: values range over {0, 1}.
  Rational spread = ball_diameter_spread(j, {Word(4, 1), 2, ShiftMode::none});
  CHECK(spread == r(1, 6));
  // Cover-pair diameter guarantee: at least k! / (2n - k)^k.
  CHECK(spread >= r(2, 36));

  CspInstance constant;
  constant.q = 2;
  constant.n = 2;
  Constraint c;
  c.support = {0};
  c.table = ConstraintTable{2, 1, {r(3), r(3)}};
  constant.constraints.push_back(c);
  CHECK(thrown_code([&] {
          ball_diameter_spread(constant, {w("00"), 1, ShiftMode::none});
        }) == "DegenerateDiameter");
}

TEST_CASE("n_h_set and identity_check") {
  std::vector<Word> h1 = n_h_set(w("111"), w("000"), 1);
  std::sort(h1.begin(), h1.end());
  CHECK(h1 == std::vector<Word>{w("001"), w("010"), w("100")});
  CHECK(n_h_set(w("111"), w("000"), 0) == std::vector<Word>{w("000")});
  CHECK(n_h_set(w("111"), w("000"), 3) == std::vector<Word>{w("111")});
  // Agreeing coordinates never move.
  std::vector<Word> mixed = n_h_set(w("120"), w("100"), 1);
  std::sort(mixed.begin(), mixed.end());
  CHECK(mixed == std::vector<Word>{w("120")});

  // Constant value: the coefficients alone must telescope to one.
  CspInstance constant;
  constant.q = 2;
  constant.n = 3;
  Constraint c;
  c.support = {0};
  c.table = ConstraintTable{2, 1, {r(5), r(5)}};
  constant.constraints.push_back(c);
  CHECK(identity_check(constant, w("111"), w("000"), 2));

  // Arity-2 instances satisfy the identity at k = 2 for any far pair.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CspInstance instance = gen_random(3, 2, 5, 6, 500 + seed, true);
    CHECK(identity_check(instance, w("11111"), w("00000"), 2));
    CHECK(identity_check(instance, w("12012"), w("00000"), 2));
    CHECK(identity_check(instance, w("22222"), w("00120"), 2));
  }
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    CspInstance instance = gen_e2lin2(6, 8, 700 + seed);
    CHECK(identity_check(instance, w("111111"), w("000000"), 2));
    CHECK(identity_check(instance, w("110110"), w("001001"), 2));
  }

  // k below the true arity breaks the identity on a generic instance.
  CspInstance pair;
  pair.q = 2;
  pair.n = 3;
  Constraint parity;
  parity.support = {0, 1};
  parity.table = xnor_table(2);
  pair.constraints.push_back(parity);
  CHECK_FALSE(identity_check(pair, w("110"), w("000"), 1));

  CHECK(thrown_code([&] { identity_check(pair, w("100"), w("000"), 2); }) ==
        "DistanceTooSmall");
}
