// ---------------------------------------------------------------------------
// symbol_array.cpp -- array validation and frequency-function arithmetic.
// ---------------------------------------------------------------------------
#include "oadiff/symbol_array.hpp"

#include <algorithm>

#include "oadiff/errors.hpp"

namespace oadiff {

void check_array(const SymbolArray& m) {
  if (m.q < 2) fail("BadShape", "alphabet size must be at least 2");
  if (m.nu < 1) fail("BadShape", "arrays need at least one column");
  for (const Word& row : m.rows) {
    if (static_cast<int>(row.size()) != m.nu) {
      fail("BadShape", "row length differs from the declared column count");
    }
    for (int e : row) {
      if (e < 0 || e >= m.q) {
        fail("SymbolOutOfRange",
             "entry " + std::to_string(e) + " outside the alphabet");
      }
    }
  }
}

SymbolArray sorted_copy(const SymbolArray& m) {
  SymbolArray out = m;
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

bool same_row_multiset(const SymbolArray& a, const SymbolArray& b) {
  if (a.q != b.q || a.nu != b.nu) return false;
  return sorted_copy(a).rows == sorted_copy(b).rows;
}

Rational FrequencyFunction::total_mass() const {
  Rational mass = 0;
  for (const auto& [word, value] : support) mass += value;
  return mass;
}

void FrequencyFunction::add(const Word& w, const Rational& delta) {
  auto [it, inserted] = support.emplace(w, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) support.erase(it);
  } else if (it->second == 0) {
    support.erase(it);
  }
}

FrequencyFunction difference(const FrequencyFunction& f,
                             const FrequencyFunction& g) {
  if (f.q != g.q || f.nu != g.nu) {
    fail("ShapeMismatch", "frequency functions live on different word spaces");
  }
  FrequencyFunction out;
  out.q = f.q;
  out.nu = f.nu;
  out.support = f.support;
  for (const auto& [word, value] : g.support) out.add(word, -value);
  return out;
}

}  // namespace oadiff
