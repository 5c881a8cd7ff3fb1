// ---------------------------------------------------------------------------
// csp.cpp -- weighted CSP evaluation, the brute-force oracle, function
// families, derandomization and instance generators.
// ---------------------------------------------------------------------------
#include "oadiff/csp.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "oadiff/budget.hpp"
#include "oadiff/designs.hpp"
#include "oadiff/errors.hpp"
#include "oadiff/symbol_array.hpp"

namespace oadiff {

namespace {

void check_table(const ConstraintTable& table) {
  if (table.q < 2 || table.arity < 1) {
    fail("BadShape", "tables need q >= 2 and arity >= 1");
  }
  const std::uint64_t size = word_space_size(table.q, table.arity);
  if (table.values.size() != size) {
    fail("BadShape", "dense table must hold exactly q^arity entries");
  }
}

void check_solution(const CspInstance& instance, const Word& x) {
  if (static_cast<int>(x.size()) != instance.n) {
    fail("BadSolutionLength", "solution length differs from variable count");
  }
  for (int symbol : x) {
    if (symbol < 0 || symbol >= instance.q) {
      fail("SymbolOutOfRange", "solution symbol outside the alphabet");
    }
  }
}

// Uniformly random strictly increasing k-subset of {0,...,n-1}; modulo
// sampling keeps the draw platform-stable.
std::vector<int> random_subset(std::mt19937_64& rng, int n, int k) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> subset(pool.begin(), pool.begin() + k);
  std::sort(subset.begin(), subset.end());
  return subset;
}

}  // namespace

const Rational& ConstraintTable::at(const Word& y) const {
  return values[word_index(y, q)];
}

Rational ConstraintTable::mean() const {
  Rational sum = 0;
  for (const Rational& value : values) sum += value;
  return sum / Rational(static_cast<long>(values.size()));
}

ConstraintTable all_equal_table(int q, int arity) {
  ConstraintTable table{q, arity, {}};
  Word y(arity, 0);
  do {
    const bool equal = std::all_of(y.begin(), y.end(),
                                   [&](int s) { return s == y[0]; });
    table.values.push_back(equal ? 1 : 0);
  } while (next_word(y, q));
  return table;
}

ConstraintTable all_zeros_table(int q, int arity) {
  ConstraintTable table{q, arity, {}};
  Word y(arity, 0);
  do {
    const bool zero = std::all_of(y.begin(), y.end(),
                                  [](int s) { return s == 0; });
    table.values.push_back(zero ? 1 : 0);
  } while (next_word(y, q));
  return table;
}

ConstraintTable zero_sum_table(int q, int arity) {
  ConstraintTable table{q, arity, {}};
  Word y(arity, 0);
  do {
    int sum = 0;
    for (int s : y) sum += s;
    table.values.push_back(sum % q == 0 ? 1 : 0);
  } while (next_word(y, q));
  return table;
}

ConstraintTable xnor_table(int arity) {
  ConstraintTable table{2, arity, {}};
  Word y(arity, 0);
  do {
    int weight = 0;
    for (int s : y) weight += s;
    table.values.push_back(weight % 2 == 0 ? 1 : 0);
  } while (next_word(y, 2));
  return table;
}

int CspInstance::max_arity() const {
  int k = 0;
  for (const Constraint& c : constraints) k = std::max(k, c.table.arity);
  return k;
}

void check_instance(const CspInstance& instance) {
  if (instance.q < 2 || instance.n < 1) {
    fail("BadShape", "instances need q >= 2 and n >= 1");
  }
  for (const Constraint& c : instance.constraints) {
    if (c.support.empty()) fail("BadShape", "constraints need a support");
    for (std::size_t i = 0; i < c.support.size(); ++i) {
      if (c.support[i] < 0 || c.support[i] >= instance.n) {
        fail("BadShape", "support index outside the variable range");
      }
      if (i > 0 && c.support[i] <= c.support[i - 1]) {
        fail("BadShape", "support indices must be strictly increasing");
      }
    }
    if (c.weight <= 0) fail("BadShape", "constraint weights must be positive");
    if (c.table.q != instance.q) {
      fail("BadShape", "table alphabet differs from the instance alphabet");
    }
    if (c.table.arity != static_cast<int>(c.support.size())) {
      fail("BadShape", "table arity differs from the support size");
    }
    check_table(c.table);
  }
}

Rational evaluate(const CspInstance& instance, const Word& x) {
  check_solution(instance, x);
  Rational value = 0;
  Word y;
  for (const Constraint& c : instance.constraints) {
    y.resize(c.support.size());
    for (std::size_t i = 0; i < c.support.size(); ++i) y[i] = x[c.support[i]];
    value += c.weight * c.table.at(y);
  }
  return value;
}

std::optional<Rational> differential_ratio(const OracleReport& oracle,
                                           const Rational& value) {
  if (oracle.opt == oracle.wor) return std::nullopt;
  return (value - oracle.wor) / (oracle.opt - oracle.wor);
}

OracleReport brute_force(const CspInstance& instance, int jobs) {
  check_instance(instance);
  const std::uint64_t total =
      word_space_size(instance.q, instance.n, enumeration_budget());

  // Closed-form mean: sum of w_i * r_{P_i}.
  Rational closed_mean = 0;
  for (const Constraint& c : instance.constraints) {
    closed_mean += c.weight * c.table.mean();
  }

  struct Chunk {
    bool seen = false;
    Rational lo, hi, sum;
    Word arglo, arghi;
  };
  jobs = std::max(1, std::min(jobs, 64));
  const std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);
  std::vector<Chunk> chunks(workers);

  auto scan = [&](std::uint64_t begin, std::uint64_t end, Chunk& chunk) {
    for (std::uint64_t index = begin; index < end; ++index) {
      Word x = word_at(index, instance.q, instance.n);
      Rational v = evaluate(instance, x);
      if (!chunk.seen) {
        chunk.seen = true;
        chunk.lo = chunk.hi = v;
        chunk.arglo = chunk.arghi = x;
        chunk.sum = v;
        continue;
      }
      chunk.sum += v;
      if (v < chunk.lo) {
        chunk.lo = v;
        chunk.arglo = x;
      }
      if (v > chunk.hi) {
        chunk.hi = v;
        chunk.arghi = x;
      }
    }
  };

  if (workers <= 1) {
    scan(0, total, chunks[0]);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t stride = total / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * stride;
      const std::uint64_t end = (w + 1 == workers) ? total : begin + stride;
      threads.emplace_back(scan, begin, end, std::ref(chunks[w]));
    }
    for (auto& thread : threads) thread.join();
  }

  // Deterministic merge in chunk order; enumeration order breaks ties, so
  // the reported argmin/argmax are the lexicographically smallest ones.
  Chunk merged;
  for (const Chunk& chunk : chunks) {
    if (!chunk.seen) continue;
    if (!merged.seen) {
      merged = chunk;
      continue;
    }
    merged.sum += chunk.sum;
    if (chunk.lo < merged.lo) {
      merged.lo = chunk.lo;
      merged.arglo = chunk.arglo;
    }
    if (chunk.hi > merged.hi) {
      merged.hi = chunk.hi;
      merged.arghi = chunk.arghi;
    }
  }

  const Rational enumerated_mean =
      merged.sum / Rational(Integer(std::to_string(total)));
  if (enumerated_mean != closed_mean) {
    fail("Internal", "closed-form mean disagrees with the enumerated mean");
  }

  OracleReport report;
  report.goal = instance.goal;
  report.mean = closed_mean;
  if (instance.goal == Goal::max) {
    report.opt = merged.hi;
    report.argopt = merged.arghi;
    report.wor = merged.lo;
    report.argwor = merged.arglo;
  } else {
    report.opt = merged.lo;
    report.argopt = merged.arglo;
    report.wor = merged.hi;
    report.argwor = merged.arghi;
  }
  if (report.opt != report.wor) {
    report.avd_defined = true;
    report.avd = (report.mean - report.wor) / (report.opt - report.wor);
  }
  return report;
}

bool is_in_Eq(const ConstraintTable& table) {
  check_table(table);
  Word y(table.arity, 0);
  do {
    if (table.at(y) != table.at(shift_word(y, 1, table.q))) return false;
  } while (next_word(y, table.q));
  return true;
}

bool is_in_Oq(const ConstraintTable& table) {
  check_table(table);
  const Rational target = Rational(table.q) * table.mean();
  Word y(table.arity, 0);
  do {
    Rational sum = 0;
    for (int a = 0; a < table.q; ++a) sum += table.at(shift_word(y, a, table.q));
    if (sum != target) return false;
  } while (next_word(y, table.q));
  return true;
}

bool is_in_Iqt(const ConstraintTable& table, int t) {
  check_table(table);
  if (t < 1 || t > table.arity) {
    fail("BadStrength", "strength outside [1, arity]");
  }
  FrequencyFunction f;
  f.q = table.q;
  f.nu = table.arity;
  Word y(table.arity, 0);
  do {
    if (table.at(y) != 0) f.add(y, table.at(y));
  } while (next_word(y, table.q));
  return is_balanced_t_independent(f, t);
}

ConstraintTable shift_table(const ConstraintTable& table, const Word& v) {
  check_table(table);
  if (static_cast<int>(v.size()) != table.arity) {
    fail("BadShiftLength", "shift vector length differs from the arity");
  }
  ConstraintTable out{table.q, table.arity, {}};
  out.values.resize(table.values.size());
  Word y(table.arity, 0);
  do {
    Word shifted(table.arity);
    for (int i = 0; i < table.arity; ++i) {
      shifted[i] = (y[i] + v[i]) % table.q;
    }
    out.values[word_index(y, table.q)] = table.at(shifted);
  } while (next_word(y, table.q));
  return out;
}

std::pair<ConstraintTable, ConstraintTable> decompose_EO(
    const ConstraintTable& table) {
  check_table(table);
  ConstraintTable e_part{table.q, table.arity, {}};
  ConstraintTable o_part{table.q, table.arity, {}};
  e_part.values.resize(table.values.size());
  o_part.values.resize(table.values.size());
  Word y(table.arity, 0);
  do {
    Rational avg = 0;
    for (int a = 0; a < table.q; ++a) avg += table.at(shift_word(y, a, table.q));
    avg /= table.q;
    const std::uint64_t index = word_index(y, table.q);
    e_part.values[index] = avg;
    o_part.values[index] = table.values[index] - avg;
  } while (next_word(y, table.q));
  return {e_part, o_part};
}

CspInstance lift_to_Eq(const CspInstance& instance) {
  check_instance(instance);
  CspInstance lifted;
  lifted.q = instance.q;
  lifted.n = instance.n + 1;
  lifted.goal = instance.goal;
  for (const Constraint& c : instance.constraints) {
    Constraint lc;
    lc.support = c.support;
    lc.support.push_back(instance.n);  // the shared shift variable z_0
    lc.weight = c.weight;
    lc.table.q = c.table.q;
    lc.table.arity = c.table.arity + 1;
    lc.table.values.resize(c.table.values.size() * c.table.q);
    Word y(lc.table.arity, 0);
    do {
      // The last coordinate is z_0: evaluate the base table at y - z_0 * 1.
      const int z0 = y.back();
      Word base(c.table.arity);
      for (int i = 0; i < c.table.arity; ++i) {
        base[i] = ((y[i] - z0) % c.table.q + c.table.q) % c.table.q;
      }
      lc.table.values[word_index(y, c.table.q)] = c.table.at(base);
    } while (next_word(y, c.table.q));
    lifted.constraints.push_back(std::move(lc));
  }
  return lifted;
}

std::vector<std::vector<int>> strong_coloring(const CspInstance& instance) {
  check_instance(instance);
  std::vector<std::vector<bool>> conflict(
      instance.n, std::vector<bool>(instance.n, false));
  for (const Constraint& c : instance.constraints) {
    for (std::size_t a = 0; a < c.support.size(); ++a) {
      for (std::size_t b = a + 1; b < c.support.size(); ++b) {
        conflict[c.support[a]][c.support[b]] = true;
        conflict[c.support[b]][c.support[a]] = true;
      }
    }
  }
  std::vector<int> color(instance.n, -1);
  int colors = 0;
  for (int v = 0; v < instance.n; ++v) {
    std::vector<bool> used(colors + 1, false);
    for (int u = 0; u < v; ++u) {
      if (conflict[v][u]) used[color[u]] = true;
    }
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
    colors = std::max(colors, c + 1);
  }
  std::vector<std::vector<int>> classes(colors);
  for (int v = 0; v < instance.n; ++v) classes[color[v]].push_back(v);
  return classes;
}

bool is_strong_coloring(const CspInstance& instance,
                        const std::vector<std::vector<int>>& classes) {
  std::vector<int> color(instance.n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int v : classes[c]) {
      if (v < 0 || v >= instance.n || color[v] != -1) return false;
      color[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < instance.n; ++v) {
    if (color[v] == -1) return false;
  }
  for (const Constraint& c : instance.constraints) {
    std::vector<bool> seen(classes.size(), false);
    for (int v : c.support) {
      if (seen[color[v]]) return false;
      seen[color[v]] = true;
    }
  }
  return true;
}

Word conditional_expectation(const CspInstance& instance) {
  check_instance(instance);
  const bool maximize = instance.goal == Goal::max;
  Word x(instance.n, -1);  // -1 marks an unfixed coordinate

  // Exact expected value of one constraint given the partial assignment,
  // scaled by q^{#unfixed in the support} to stay in integers of the table.
  auto conditional = [&](const Constraint& c) -> Rational {
    Rational sum = 0;
    int unfixed = 0;
    for (int v : c.support) unfixed += (x[v] == -1) ? 1 : 0;
    Word y(c.table.arity, 0);
    do {
      bool consistent = true;
      for (int i = 0; i < c.table.arity; ++i) {
        const int fixed = x[c.support[i]];
        if (fixed != -1 && fixed != y[i]) {
          consistent = false;
          break;
        }
      }
      if (consistent) sum += c.table.at(y);
    } while (next_word(y, c.table.q));
    return sum / Rational(Integer(std::to_string(
               word_space_size(c.table.q, unfixed))));
  };

  for (int j = 0; j < instance.n; ++j) {
    int best_symbol = 0;
    Rational best_value;
    bool first = true;
    for (int s = 0; s < instance.q; ++s) {
      x[j] = s;
      Rational value = 0;
      for (const Constraint& c : instance.constraints) {
        value += c.weight * conditional(c);
      }
      const bool better =
          first || (maximize ? value > best_value : value < best_value);
      if (better) {
        first = false;
        best_value = value;
        best_symbol = s;
      }
    }
    x[j] = best_symbol;
  }
  return x;
}

CspInstance gen_I_qkn(int q, int k, int n) {
  if (q < 2 || k < 1 || n < 1 || k > q * n) fail("BadArgs", "bad family shape");
  CspInstance instance;
  instance.q = q;
  instance.n = q * n;
  instance.goal = Goal::max;
  const ConstraintTable table = all_equal_table(q, k);
  for_each_combination(q * n, k, [&](const std::vector<int>& J) {
    Constraint c;
    c.support = J;
    c.table = table;
    instance.constraints.push_back(std::move(c));
  });
  return instance;
}

CspInstance gen_tilde_I(int n) {
  if (n < 1) fail("BadArgs", "need n >= 1");
  CspInstance instance;
  instance.q = 2;
  instance.n = 2 * n;
  instance.goal = Goal::max;
  const ConstraintTable table = xnor_table(2);
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = i + 1; j < 2 * n; ++j) {
      if (i % 2 == 0 && j == i + 1) continue;  // drop the matched pairs
      Constraint c;
      c.support = {i, j};
      c.table = table;
      instance.constraints.push_back(std::move(c));
    }
  }
  return instance;
}

CspInstance gen_J_qkn(int q, int k, int n) {
  if (q < 2 || k < 1 || n < k) fail("BadArgs", "bad family shape");
  CspInstance instance;
  instance.q = q;
  instance.n = n;
  instance.goal = Goal::max;
  const ConstraintTable table = all_zeros_table(q, k);
  for_each_combination(n, k, [&](const std::vector<int>& J) {
    Constraint c;
    c.support = J;
    c.table = table;
    instance.constraints.push_back(std::move(c));
  });
  return instance;
}

CspInstance gen_random(int q, int k, int n, int m, std::uint64_t seed,
                       bool rational_tables) {
  if (q < 2 || k < 1 || k > n || m < 1) fail("BadArgs", "bad generator shape");
  std::mt19937_64 rng(seed);
  CspInstance instance;
  instance.q = q;
  instance.n = n;
  instance.goal = Goal::max;
  const std::uint64_t cells = word_space_size(q, k);
  for (int i = 0; i < m; ++i) {
    Constraint c;
    c.support = random_subset(rng, n, k);
    c.table.q = q;
    c.table.arity = k;
    for (std::uint64_t cell = 0; cell < cells; ++cell) {
      if (rational_tables) {
        const long num = static_cast<long>(rng() % 5);
        const long den = 1 + static_cast<long>(rng() % 4);
        c.table.values.push_back(rat(num, den));
      } else {
        c.table.values.push_back(Rational(static_cast<long>(rng() % 2)));
      }
    }
    instance.constraints.push_back(std::move(c));
  }
  return instance;
}

CspInstance gen_e2lin2(int n, int m, std::uint64_t seed) {
  if (n < 2 || m < 1) fail("BadArgs", "need n >= 2 and m >= 1");
  std::mt19937_64 rng(seed);
  CspInstance instance;
  instance.q = 2;
  instance.n = n;
  instance.goal = Goal::max;
  const ConstraintTable equal = xnor_table(2);
  ConstraintTable unequal{2, 2, {}};
  for (const Rational& value : equal.values) {
    unequal.values.push_back(Rational(1) - value);
  }
  for (int i = 0; i < m; ++i) {
    Constraint c;
    c.support = random_subset(rng, n, 2);
    c.table = (rng() % 2 == 0) ? equal : unequal;
    instance.constraints.push_back(std::move(c));
  }
  return instance;
}

bool xnor_affine_check(const ConstraintTable& table) {
  check_table(table);
  if (table.q != 2) {
    fail("AlphabetNotBinary", "the parity-affine test needs q = 2");
  }
  bool seen_even = false, seen_odd = false;
  Rational even_value = 0, odd_value = 0;
  Word y(table.arity, 0);
  do {
    int weight = 0;
    for (int s : y) weight += s;
    const Rational& value = table.at(y);
    if (weight % 2 == 0) {
      if (seen_even && value != even_value) return false;
      even_value = value;
      seen_even = true;
    } else {
      if (seen_odd && value != odd_value) return false;
      odd_value = value;
      seen_odd = true;
    }
  } while (next_word(y, 2));
  return true;
}

}  // namespace oadiff
