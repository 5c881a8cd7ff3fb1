#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oadiff/designs.hpp"
#include "test_util.hpp"

using namespace oadiff;
using testutil::arr;
using testutil::r;
using testutil::thrown_code;
using testutil::w;

namespace {

// Reference 9-row strength-2 array over three symbols (zero-sum rows).
SymbolArray oa9() {
  return arr(3, {"000", "012", "021", "102", "111", "120", "201", "210",
                 "222"});
}

// Reference 4-row Boolean strength-2 array (even-weight words).
SymbolArray oa4() { return arr(2, {"000", "011", "101", "110"}); }

// 12-row Boolean strength-2 array with a doubled zero row.
SymbolArray oa12() {
  return arr(2, {"0000", "0000", "0011", "0101", "0110", "0111", "1001",
                 "1010", "1011", "1100", "1101", "1110"});
}

SymbolArray ds3() { return arr(3, {"00", "01", "02"}); }

}  // namespace

TEST_CASE("frequency: empirical word frequencies") {
  SymbolArray single = arr(2, {"00"});
  CHECK(frequency(single).value(w("00")) == 1);

  FrequencyFunction f = frequency(oa9());
  CHECK(f.support.size() == 9);
  for (const auto& [word, value] : f.support) CHECK(value == r(1, 9));
  CHECK(f.total_mass() == 1);

  FrequencyFunction g = frequency(arr(2, {"01", "01", "10"}));
  CHECK(g.value(w("01")) == r(2, 3));
  CHECK(g.value(w("10")) == r(1, 3));
  CHECK(g.value(w("00")) == 0);

  SymbolArray empty;
  empty.q = 2;
  empty.nu = 2;
  CHECK(thrown_code([&] { frequency(empty); }) == "EmptyArray");
}

TEST_CASE("shift_class_frequency: smoothing over uniform shifts") {
  FrequencyFunction f = shift_class_frequency(arr(2, {"01"}));
  CHECK(f.value(w("01")) == r(1, 2));
  CHECK(f.value(w("10")) == r(1, 2));
  CHECK(f.value(w("00")) == 0);

  FrequencyFunction g = shift_class_frequency(ds3());
  CHECK(g.support.size() == 9);
  for (const auto& [word, value] : g.support) CHECK(value == r(1, 9));

  FrequencyFunction h = shift_class_frequency(arr(2, {"00", "00"}));
  CHECK(h.value(w("00")) == r(1, 2));
  CHECK(h.value(w("11")) == r(1, 2));
  CHECK(h.total_mass() == 1);

  // Invariance under uniform shifts of the argument.
  FrequencyFunction k = shift_class_frequency(arr(3, {"012", "200"}));
  for (const auto& [word, value] : k.support) {
    CHECK(k.value(shift_word(word, 1, 3)) == value);
    CHECK(k.value(shift_word(word, 2, 3)) == value);
  }
}

TEST_CASE("is_balanced_t_independent") {
  // Uniform distribution over all Boolean words of length 3.
  FrequencyFunction uniform;
  uniform.q = 2;
  uniform.nu = 3;
  Word u(3, 0);
  do {
    uniform.add(u, r(1, 8));
  } while (next_word(u, 2));
  CHECK(is_balanced_t_independent(uniform, 1));
  CHECK(is_balanced_t_independent(uniform, 2));
  CHECK(is_balanced_t_independent(uniform, 3));

  CHECK(is_balanced_t_independent(frequency(oa9()), 2));
  CHECK_FALSE(is_balanced_t_independent(frequency(arr(2, {"00", "01"})), 1));

  CHECK(thrown_code([&] { is_balanced_t_independent(uniform, 0); }) ==
        "BadStrength");
  CHECK(thrown_code([&] { is_balanced_t_independent(uniform, 4); }) ==
        "BadStrength");

  // Signed zero-mass functions: margins must vanish.
  FrequencyFunction signed_ok = difference(frequency(oa4()),
                                           frequency(arr(2, {"000", "011",
                                                             "110", "101"})));
  CHECK(signed_ok.total_mass() == 0);
  CHECK(is_balanced_t_independent(signed_ok, 2));
}

TEST_CASE("is_orthogonal_array") {
  CHECK(is_orthogonal_array(oa9(), 2));
  CHECK(is_orthogonal_array(oa9(), 1));  // strength is downward closed
  CHECK_FALSE(is_orthogonal_array(oa9(), 3));

  CHECK(is_orthogonal_array(oa4(), 2));
  CHECK(is_orthogonal_array(oa12(), 2));

  // A constant column kills every strength-2 projection through it.
  CHECK_FALSE(is_orthogonal_array(transform_B(oa4()), 2));
  CHECK(is_orthogonal_array(arr(2, {"0", "1"}), 1));

  // Equivalence with the frequency-margin formulation.
  for (const SymbolArray& m : {oa9(), oa4(), oa12(), ds3()}) {
    for (int t = 1; t <= m.nu; ++t) {
      CHECK(is_orthogonal_array(m, t) ==
            is_balanced_t_independent(frequency(m), t));
    }
  }
}

TEST_CASE("is_difference_scheme") {
  CHECK(is_difference_scheme(ds3(), 2));
  CHECK(is_difference_scheme(transform_B(oa4()), 2));

  // Equivalence with the smoothed-frequency formulation.
  for (const SymbolArray& m : {oa9(), oa4(), oa12(), ds3()}) {
    for (int t = 1; t <= m.nu; ++t) {
      CHECK(is_difference_scheme(m, t) ==
            is_balanced_t_independent(shift_class_frequency(m), t));
    }
  }

  // Boolean schemes of even strength extend one step for free.
  SymbolArray n = transform_B(oa4());
  REQUIRE(is_difference_scheme(n, 2));
  CHECK(is_difference_scheme(n, 3));

  // Every orthogonal array is a difference scheme of the same strength.
  CHECK(is_difference_scheme(oa9(), 2));
  CHECK(is_difference_scheme(oa12(), 2));
}

TEST_CASE("max_frequency") {
  auto [word9, value9] = max_frequency(oa9(), FrequencyMode::plain);
  CHECK(value9 == r(1, 9));
  CHECK(word9 == w("000"));  // lexicographic tie-break

  auto [word12, value12] = max_frequency(oa12(), FrequencyMode::plain);
  CHECK(value12 == r(1, 6));
  CHECK(word12 == w("0000"));

  auto [word_e, value_e] =
      max_frequency(arr(3, {"000", "012", "021"}), FrequencyMode::shift_class);
  CHECK(value_e == r(1, 3));
  CHECK(word_e == w("000"));
  CHECK(word_e[0] == 0);  // shift-class argmax is normalized

  auto [word1, value1] = max_frequency(arr(2, {"01"}), FrequencyMode::plain);
  CHECK(value1 == 1);
  CHECK(word1 == w("01"));
}

TEST_CASE("transforms A, B, C") {
  // C expands the scheme into the full strength-2 array.
  CHECK(same_row_multiset(transform_C(ds3()), arr(3, {"00", "11", "22", "01",
                                                      "12", "20", "02", "10",
                                                      "21"})));
  SymbolArray c = transform_C(ds3());
  CHECK(is_orthogonal_array(c, 2));

  // An array is a scheme exactly when its expansion is an orthogonal array.
  SymbolArray not_ds = arr(3, {"00", "01"});
  CHECK(is_difference_scheme(not_ds, 2) ==
        is_orthogonal_array(transform_C(not_ds), 2));

  // B appends a zero column; A undoes it.
  SymbolArray n = transform_B(oa4());
  CHECK(n.nu == 4);
  for (const Word& row : n.rows) CHECK(row[3] == 0);
  CHECK(same_row_multiset(transform_A(n), oa4()));

  // A on the 9-row array keeps the zero-ending rows: a strength-1 array.
  SymbolArray a = transform_A(oa9());
  CHECK(same_row_multiset(a, arr(3, {"00", "12", "21"})));
  CHECK(is_orthogonal_array(a, 1));

  // A filters: no zero in the last column gives an empty array.
  CHECK(transform_A(arr(2, {"01", "11"})).rows.empty());
  CHECK(thrown_code([&] { transform_A(arr(2, {"0", "1"})); }) == "BadShape");
}

TEST_CASE("zerosum_oa") {
  CHECK(same_row_multiset(zerosum_oa(3, 2), oa9()));
  CHECK(same_row_multiset(zerosum_oa(2, 1), arr(2, {"00", "11"})));
  for (auto [q, t] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3},
                                                      {4, 2}, {3, 3}}) {
    SymbolArray m = zerosum_oa(q, t);
    CHECK(m.nu == t + 1);
    CHECK(m.row_count() == static_cast<long>(word_space_size(q, t)));
    CHECK(is_orthogonal_array(m, t));
    CHECK_FALSE(is_orthogonal_array(m, t + 1));
  }
  CHECK(thrown_code([&] { zerosum_oa(1, 2); }) == "BadArgs");
}

TEST_CASE("equation_ds") {
  SymbolArray e21 = equation_ds(2, 1, EquationVariant::even);
  CHECK(same_row_multiset(e21, arr(2, {"00"})));
  CHECK(is_difference_scheme(e21, 1));

  SymbolArray e31 = equation_ds(3, 1, EquationVariant::even);
  CHECK(same_row_multiset(e31, arr(3, {"00"})));

  SymbolArray o31 = equation_ds(3, 1, EquationVariant::odd);
  CHECK(o31.nu == 3);
  CHECK(o31.row_count() == 3);
  CHECK(is_difference_scheme(o31, 2));

  SymbolArray e32 = equation_ds(3, 2, EquationVariant::even);
  CHECK(e32.nu == 4);
  CHECK(e32.row_count() == 9);
  CHECK(is_difference_scheme(e32, 3));

  SymbolArray e22 = equation_ds(2, 2, EquationVariant::even);
  CHECK(e22.nu == 4);
  CHECK(is_difference_scheme(e22, 3));

  SymbolArray o52 = equation_ds(5, 2, EquationVariant::odd);
  CHECK(o52.nu == 5);
  CHECK(is_difference_scheme(o52, 4));

  CHECK(thrown_code([&] { equation_ds(2, 1, EquationVariant::odd); }) ==
        "OddVariantNeedsOddQ");
}

TEST_CASE("array validation and multiset comparison") {
  SymbolArray bad = arr(2, {"02"});
  CHECK(thrown_code([&] { check_array(bad); }) == "SymbolOutOfRange");
  SymbolArray ragged = arr(2, {"00"});
  ragged.rows.push_back(w("0"));
  CHECK(thrown_code([&] { check_array(ragged); }) == "BadShape");

  CHECK(same_row_multiset(arr(2, {"01", "10"}), arr(2, {"10", "01"})));
  CHECK_FALSE(same_row_multiset(arr(2, {"01", "01"}), arr(2, {"10", "01"})));
}
