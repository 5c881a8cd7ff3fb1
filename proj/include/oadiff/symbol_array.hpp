// ---------------------------------------------------------------------------
// symbol_array.hpp -- arrays over a finite alphabet and their frequency
// functions.
//
// A SymbolArray is an ordered multiset of rows from {0,...,q-1}^nu: the
// carrier for orthogonal arrays, difference schemes and the two halves of
// alphabet-reduction / cover pairs.  A FrequencyFunction is a signed
// rational-valued function on the word space with finite support; it houses
// both empirical frequencies (mass 1) and differences of frequencies
// (mass 0).
// ---------------------------------------------------------------------------
#pragma once

#include <map>
#include <vector>

#include "oadiff/rational.hpp"
#include "oadiff/words.hpp"

namespace oadiff {

struct SymbolArray {
  int q = 2;                   // alphabet size, >= 2
  int nu = 1;                  // number of columns, >= 1
  std::vector<Word> rows;      // stored in insertion order

  int row_count() const { return static_cast<int>(rows.size()); }
};

// Throws Error("BadShape") / Error("SymbolOutOfRange") on malformed input.
void check_array(const SymbolArray& m);

// Canonical (sorted-row) copy: arrays are compared as multisets of rows.
SymbolArray sorted_copy(const SymbolArray& m);
bool same_row_multiset(const SymbolArray& a, const SymbolArray& b);

struct FrequencyFunction {
  int q = 2;
  int nu = 1;
  std::map<Word, Rational> support;  // nonzero values only

  Rational value(const Word& w) const {
    auto it = support.find(w);
    return it == support.end() ? Rational(0) : it->second;
  }
  Rational total_mass() const;

  // Insert-or-accumulate; drops the entry if the sum cancels to zero.
  void add(const Word& w, const Rational& delta);
};

// Pointwise difference f - g (defined on the common shape).
FrequencyFunction difference(const FrequencyFunction& f,
                             const FrequencyFunction& g);

}  // namespace oadiff
