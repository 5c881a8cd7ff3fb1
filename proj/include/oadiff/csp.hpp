// ---------------------------------------------------------------------------
// csp.hpp -- weighted bounded-arity constraint satisfaction over Sigma_q.
//
// Instances carry dense rational truth tables (lexicographic entry order,
// first coordinate most significant).  Besides exact evaluation and a
// brute-force oracle, the module provides the function-family predicates
// (shift-invariant E_q, mean-averaging O_q, balanced t-wise independent
// I_q^t), shifts and the E/O decomposition, the shift-variable lift into
// E_q, greedy strong coloring, conditional-expectation derandomization and
// the named instance families used by the experiments.
// ---------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oadiff/rational.hpp"
#include "oadiff/words.hpp"

namespace oadiff {

struct ConstraintTable {
  int q = 2;
  int arity = 1;
  std::vector<Rational> values;  // q^arity entries, lexicographic order

  const Rational& at(const Word& y) const;
  Rational mean() const;  // r_P = average of the entries
};

// Common predicate tables.
ConstraintTable all_equal_table(int q, int arity);
ConstraintTable all_zeros_table(int q, int arity);
ConstraintTable zero_sum_table(int q, int arity);
ConstraintTable xnor_table(int arity);  // q = 2 parity: 1 iff even weight

struct Constraint {
  std::vector<int> support;  // strictly increasing 0-based variable indices
  Rational weight = 1;       // > 0
  ConstraintTable table;
};

enum class Goal { max, min };

struct CspInstance {
  int q = 2;
  int n = 1;
  Goal goal = Goal::max;
  std::vector<Constraint> constraints;

  int max_arity() const;
};

void check_instance(const CspInstance& instance);

struct OracleReport {
  Goal goal = Goal::max;
  Rational opt = 0;
  Rational wor = 0;
  Rational mean = 0;
  Word argopt;
  Word argwor;
  bool avd_defined = false;  // false when opt == wor
  Rational avd = 0;          // (mean - wor) / (opt - wor), max orientation
};

// Exact weighted sum of table lookups.
Rational evaluate(const CspInstance& instance, const Word& x);

// Differential ratio of a value, oriented by the instance goal; nullopt when
// the diameter is zero.
std::optional<Rational> differential_ratio(const OracleReport& oracle,
                                           const Rational& value);

// Full enumeration of the q^n solutions (Error("Budget") beyond the budget);
// the mean is computed in closed form (sum of w_i * r_{P_i}) and cross-
// checked against the enumerated average.  `jobs` > 1 partitions the
// enumeration with a deterministic merge.
OracleReport brute_force(const CspInstance& instance, int jobs = 1);

// Function-family membership.
bool is_in_Eq(const ConstraintTable& table);
bool is_in_Oq(const ConstraintTable& table);
bool is_in_Iqt(const ConstraintTable& table, int t);

// Shifted table: output(y) = input(y + v mod q).
ConstraintTable shift_table(const ConstraintTable& table, const Word& v);

// P = P_E + P_O with P_E(y) = avg_a P(y + a*1) in E_q and P_O in O_q with
// zero mean; the sum reconstructs the input exactly.
std::pair<ConstraintTable, ConstraintTable> decompose_EO(
    const ConstraintTable& table);

// Add a shift variable z_0 (new last variable index n) and replace each
// constraint P(x_J) by P^E(x_J, z_0) = P(x_J - z_0 * 1); the lifted tables
// are shift-invariant and v(lift, (x, z0)) = v(I, x - z0 * 1).
CspInstance lift_to_Eq(const CspInstance& instance);

// Greedy strong coloring of the variable conflict graph (co-occurrence in a
// support); classes returned in color order, every support meets each class
// at most once.
std::vector<std::vector<int>> strong_coloring(const CspInstance& instance);
bool is_strong_coloring(const CspInstance& instance,
                        const std::vector<std::vector<int>>& classes);

// Greedy derandomization: returns x with v(I, x) >= mean (goal-oriented).
Word conditional_expectation(const CspInstance& instance);

// Instance families.
// All C(qn, k) all-equal constraints of weight 1 on q*n variables.
CspInstance gen_I_qkn(int q, int k, int n);
// Binary equality constraints on 2n variables: every pair except the n
// matched pairs (2j, 2j+1).
CspInstance gen_tilde_I(int n);
// All C(n, k) all-zeros constraints on n Boolean variables.
CspInstance gen_J_qkn(int q, int k, int n);
// Seeded uniform random instance; 0/1 predicate tables by default,
// uniform small-denominator rationals when rational_tables is set.
CspInstance gen_random(int q, int k, int n, int m, std::uint64_t seed,
                       bool rational_tables = false);
// Seeded random equality/disequality (parity) instance over q = 2.
CspInstance gen_e2lin2(int n, int m, std::uint64_t seed);

// True iff the table equals a * XNOR^k + b for some rationals a, b
// (q = 2 only); equivalent to balanced (k-1)-wise independence.
bool xnor_affine_check(const ConstraintTable& table);

}  // namespace oadiff
