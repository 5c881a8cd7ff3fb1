// ---------------------------------------------------------------------------
// designs.hpp -- orthogonal arrays, difference schemes and their invariants.
//
// Operations: empirical frequencies (plain and smoothed over uniform-shift
// classes), balanced t-wise independence of signed frequency functions,
// OA / DS verification, the three structural transformations between OAs
// and DSs, and two explicit constructions (zero-sum arrays and the
// linear-equation difference schemes).
// ---------------------------------------------------------------------------
#pragma once

#include <utility>

#include "oadiff/symbol_array.hpp"

namespace oadiff {

// mu^M: empirical frequency of each word among the rows (values sum to 1).
FrequencyFunction frequency(const SymbolArray& m);

// mu^M_E: average of mu^M over the q uniform shifts of the argument;
// invariant under uniform shifts.
FrequencyFunction shift_class_frequency(const SymbolArray& m);

// True iff every t-coordinate margin of f sums to total_mass / q^t.
// Works for signed f (mass may be 0, margins must then vanish).
bool is_balanced_t_independent(const FrequencyFunction& f, int t);

// OA of strength t: row count divisible by q^t and every t-column
// projection perfectly uniform over the q^t words.
bool is_orthogonal_array(const SymbolArray& m, int t);

// Difference scheme of strength t: row count divisible by q^{t-1} and every
// t-column projection uniform over the q^{t-1} uniform-shift classes.
bool is_difference_scheme(const SymbolArray& m, int t);

enum class FrequencyMode { plain, shift_class };

// plain: argmax of mu^M (candidate extremal word frequency).
// shift_class: argmax over v in {0} x Sigma_q^{nu-1} of q * mu^M_E(v).
// Ties broken by lexicographically smallest word.
std::pair<Word, Rational> max_frequency(const SymbolArray& m,
                                        FrequencyMode mode);

// Keep the rows whose last entry is 0 and drop that column.
SymbolArray transform_A(const SymbolArray& m);
// Append a column of zeros.
SymbolArray transform_B(const SymbolArray& m);
// Replace each row by its q uniform shifts.
SymbolArray transform_C(const SymbolArray& m);

// The q^t accepting entries of the zero-sum predicate on t+1 coordinates:
// a simple OA(q^t, t+1, q, t).
SymbolArray zerosum_oa(int q, int t);

enum class EquationVariant { even, odd };

// Solutions, normalized by y_1 = 0, of the two modular linear equations that
// generate difference schemes:
//   even: y_1+...+y_h - y_{h+1}-...-y_{2h}            = 0 (mod q)
//   odd:  y_1+...+y_{h-1}+2y_h - y_{h+1}-...-y_{2h+1} = 0 (mod q), q odd
// where h = nu_half.  Even gives a DS of strength 2h-1 on 2h columns, odd a
// DS of strength 2h on 2h+1 columns.
SymbolArray equation_ds(int q, int nu_half, EquationVariant variant);

}  // namespace oadiff
