// ---------------------------------------------------------------------------
// designs.cpp -- frequencies, balance checks, OA/DS verification and the
// structural transformations between them.
// ---------------------------------------------------------------------------
#include "oadiff/designs.hpp"

#include <cstdint>
#include <map>

#include "oadiff/errors.hpp"

namespace oadiff {

namespace {

void require_rows(const SymbolArray& m) {
  check_array(m);
  if (m.rows.empty()) fail("EmptyArray", "operation needs at least one row");
}

void require_strength(const SymbolArray& m, int t) {
  check_array(m);
  if (t < 1 || t > m.nu) {
    fail("BadStrength", "strength " + std::to_string(t) +
                            " outside [1, " + std::to_string(m.nu) + "]");
  }
}

Word project(const Word& row, const std::vector<int>& J) {
  Word v(J.size());
  for (std::size_t i = 0; i < J.size(); ++i) v[i] = row[J[i]];
  return v;
}

// Canonical representative of the uniform-shift class of v: shift so the
// first coordinate becomes 0.
Word shift_class_rep(const Word& v, int q) {
  return shift_word(v, (q - v[0]) % q, q);
}

}  // namespace

FrequencyFunction frequency(const SymbolArray& m) {
  require_rows(m);
  FrequencyFunction f;
  f.q = m.q;
  f.nu = m.nu;
  const Rational unit = rat(1, m.row_count());
  for (const Word& row : m.rows) f.add(row, unit);
  return f;
}

FrequencyFunction shift_class_frequency(const SymbolArray& m) {
  require_rows(m);
  FrequencyFunction f;
  f.q = m.q;
  f.nu = m.nu;
  const Rational unit = rat(1, m.row_count() * static_cast<long>(m.q));
  for (const Word& row : m.rows) {
    for (int a = 0; a < m.q; ++a) f.add(shift_word(row, a, m.q), unit);
  }
  return f;
}

bool is_balanced_t_independent(const FrequencyFunction& f, int t) {
  if (t < 1 || t > f.nu) {
    fail("BadStrength", "strength " + std::to_string(t) +
                            " outside [1, " + std::to_string(f.nu) + "]");
  }
  const std::uint64_t cells = word_space_size(f.q, t);
  const Rational target = f.total_mass() / Rational(static_cast<long>(cells));
  bool balanced = true;
  for_each_combination(f.nu, t, [&](const std::vector<int>& J) {
    if (!balanced) return;
    std::map<Word, Rational> margins;
    for (const auto& [word, value] : f.support) {
      margins[project(word, J)] += value;
    }
    if (target == 0) {
      for (const auto& [v, sum] : margins) {
        if (sum != 0) balanced = false;
      }
    } else {
      if (margins.size() != cells) {
        balanced = false;
        return;
      }
      for (const auto& [v, sum] : margins) {
        if (sum != target) balanced = false;
      }
    }
  });
  return balanced;
}

bool is_orthogonal_array(const SymbolArray& m, int t) {
  require_strength(m, t);
  const std::uint64_t cells = word_space_size(m.q, t);
  const long R = m.row_count();
  if (R % static_cast<long>(cells) != 0) return false;
  const long per_cell = R / static_cast<long>(cells);
  bool uniform = true;
  for_each_combination(m.nu, t, [&](const std::vector<int>& J) {
    if (!uniform) return;
    std::map<Word, long> counts;
    for (const Word& row : m.rows) ++counts[project(row, J)];
    if (per_cell == 0) {
      uniform = counts.empty();
      return;
    }
    if (counts.size() != cells) {
      uniform = false;
      return;
    }
    for (const auto& [v, count] : counts) {
      if (count != per_cell) uniform = false;
    }
  });
  return uniform;
}

bool is_difference_scheme(const SymbolArray& m, int t) {
  require_strength(m, t);
  const std::uint64_t classes = word_space_size(m.q, t - 1);
  const long R = m.row_count();
  if (R % static_cast<long>(classes) != 0) return false;
  const long per_class = R / static_cast<long>(classes);
  bool uniform = true;
  for_each_combination(m.nu, t, [&](const std::vector<int>& J) {
    if (!uniform) return;
    std::map<Word, long> counts;
    for (const Word& row : m.rows) {
      ++counts[shift_class_rep(project(row, J), m.q)];
    }
    if (per_class == 0) {
      uniform = counts.empty();
      return;
    }
    if (counts.size() != classes) {
      uniform = false;
      return;
    }
    for (const auto& [v, count] : counts) {
      if (count != per_class) uniform = false;
    }
  });
  return uniform;
}

std::pair<Word, Rational> max_frequency(const SymbolArray& m,
                                        FrequencyMode mode) {
  require_rows(m);
  if (mode == FrequencyMode::plain) {
    FrequencyFunction f = frequency(m);
    // The support map is ordered, so the first strict maximum is the
    // lexicographically smallest argmax.
    Word best;
    Rational best_value = -1;
    for (const auto& [word, value] : f.support) {
      if (value > best_value) {
        best = word;
        best_value = value;
      }
    }
    return {best, best_value};
  }
  FrequencyFunction f = shift_class_frequency(m);
  Word v(m.nu, 0);
  Word best;
  Rational best_value = -1;
  // Scan v over {0} x Sigma_q^{nu-1} in lexicographic order.
  while (true) {
    Rational value = Rational(m.q) * f.value(v);
    if (value > best_value) {
      best = v;
      best_value = value;
    }
    // Odometer over the last nu-1 coordinates.
    int j = m.nu - 1;
    for (; j >= 1; --j) {
      if (++v[j] < m.q) break;
      v[j] = 0;
    }
    if (j < 1) break;
  }
  return {best, best_value};
}

SymbolArray transform_A(const SymbolArray& m) {
  check_array(m);
  if (m.nu < 2) fail("BadShape", "dropping the last column needs >= 2 columns");
  SymbolArray out;
  out.q = m.q;
  out.nu = m.nu - 1;
  for (const Word& row : m.rows) {
    if (row.back() == 0) out.rows.emplace_back(row.begin(), row.end() - 1);
  }
  return out;
}

SymbolArray transform_B(const SymbolArray& m) {
  check_array(m);
  SymbolArray out;
  out.q = m.q;
  out.nu = m.nu + 1;
  for (const Word& row : m.rows) {
    Word extended = row;
    extended.push_back(0);
    out.rows.push_back(std::move(extended));
  }
  return out;
}

SymbolArray transform_C(const SymbolArray& m) {
  check_array(m);
  SymbolArray out;
  out.q = m.q;
  out.nu = m.nu;
  for (const Word& row : m.rows) {
    for (int a = 0; a < m.q; ++a) out.rows.push_back(shift_word(row, a, m.q));
  }
  return out;
}

SymbolArray zerosum_oa(int q, int t) {
  if (q < 2 || t < 1) fail("BadArgs", "need q >= 2 and t >= 1");
  SymbolArray out;
  out.q = q;
  out.nu = t + 1;
  Word prefix(t, 0);
  while (true) {
    int sum = 0;
    for (int e : prefix) sum += e;
    Word row = prefix;
    row.push_back((q - sum % q) % q);
    out.rows.push_back(std::move(row));
    if (!next_word(prefix, q)) break;
  }
  return out;
}

SymbolArray equation_ds(int q, int nu_half, EquationVariant variant) {
  if (q < 2 || nu_half < 1) fail("BadArgs", "need q >= 2 and nu_half >= 1");
  if (variant == EquationVariant::odd && q % 2 == 0) {
    fail("OddVariantNeedsOddQ", "the odd variant requires an odd alphabet");
  }
  const int h = nu_half;
  const int cols = (variant == EquationVariant::even) ? 2 * h : 2 * h + 1;
  SymbolArray out;
  out.q = q;
  out.nu = cols;
  // y_1 = 0 is fixed and the last coordinate is determined by the equation,
  // so the free coordinates are y_2 ... y_{cols-1}.
  Word free(cols - 2 >= 0 ? cols - 2 : 0, 0);
  while (true) {
    Word row(cols, 0);
    for (std::size_t i = 0; i < free.size(); ++i) row[i + 1] = free[i];
    // Signed sum of the first cols-1 coordinates per the equation.
    long acc = 0;
    if (variant == EquationVariant::even) {
      // y_1 + ... + y_h - y_{h+1} - ... - y_{2h} = 0 (mod q)
      for (int i = 0; i < h; ++i) acc += row[i];
      for (int i = h; i < 2 * h - 1; ++i) acc -= row[i];
      // Solve for y_{2h}: acc - y_{2h} = 0.
      row[cols - 1] = static_cast<int>(((acc % q) + q) % q);
    } else {
      // y_1 + ... + y_{h-1} + 2 y_h - y_{h+1} - ... - y_{2h+1} = 0 (mod q)
      for (int i = 0; i < h - 1; ++i) acc += row[i];
      acc += 2L * row[h - 1];
      for (int i = h; i < 2 * h; ++i) acc -= row[i];
      row[cols - 1] = static_cast<int>(((acc % q) + q) % q);
    }
    out.rows.push_back(std::move(row));
    if (free.empty() || !next_word(free, q)) break;
  }
  return out;
}

}  // namespace oadiff
