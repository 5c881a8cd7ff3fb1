// ---------------------------------------------------------------------------
// reduction.cpp -- partition-shift certificates, alphabet reduction and
// alphabet enlargement.
// ---------------------------------------------------------------------------
#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "oadiff/reduction.hpp"

#include "oadiff/budget.hpp"
#include "oadiff/designs.hpp"
#include "oadiff/errors.hpp"
#include "oadiff/neighborhood.hpp"

namespace oadiff {

namespace {

int mod_q(long v, int q) {
  long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// classes must partition {0, ..., n-1}.
void check_partition(const std::vector<std::vector<int>>& classes, int n) {
  std::vector<int> hits(n, 0);
  for (const std::vector<int>& cls : classes) {
    for (int j : cls) {
      if (j < 0 || j >= n) fail("ShapeMismatch", "class member out of range");
      ++hits[j];
    }
  }
  for (int j = 0; j < n; ++j) {
    if (hits[j] != 1) {
      fail("NotAStrongColoring",
           "variable " + std::to_string(j + 1) +
               " is not covered exactly once");
    }
  }
}

Rational closed_form_mean(const CspInstance& instance) {
  Rational mean = 0;
  for (const Constraint& c : instance.constraints) {
    mean += c.weight * c.table.mean();
  }
  return mean;
}

}  // namespace

Word y_partition(const std::vector<std::vector<int>>& classes, const Word& x,
                 const Word& u, int q) {
  if (u.size() != classes.size()) {
    fail("ShapeMismatch", "one shift per class is required");
  }
  Word y = x;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int j : classes[c]) {
      if (j < 0 || j >= static_cast<int>(x.size())) {
        fail("ShapeMismatch", "class member out of range");
      }
      y[j] = mod_q(static_cast<long>(x[j]) + u[c], q);
    }
  }
  return y;
}

Word y_relabel(const Word& x, const Word& u) {
  Word y(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0 || x[j] >= static_cast<int>(u.size())) {
      fail("ShapeMismatch", "solution symbol outside the relabeling word");
    }
    y[j] = u[x[j]];
  }
  return y;
}

Rational average_certificate(const CspInstance& instance,
                             const std::vector<std::vector<int>>& classes,
                             const SymbolArray& m, CertFamily family,
                             const CertificateOptions& options) {
  check_instance(instance);
  check_array(m);
  if (m.q != instance.q) {
    fail("ShapeMismatch", "array alphabet does not match the instance");
  }
  if (static_cast<int>(classes.size()) != m.nu) {
    fail("ShapeMismatch", "the array needs one column per class");
  }
  if (m.rows.empty()) fail("EmptyArray", "certificate array has no rows");
  check_partition(classes, instance.n);

  const int t = options.t;
  if (family == CertFamily::Iqt && t < 1) {
    fail("BadArgs", "family Iqt needs a strength t >= 1");
  }
  const int merged = static_cast<int>(classes.size()) - 1;  // Iqt only

  // Color of each variable.
  std::vector<int> color(instance.n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int j : classes[c]) color[j] = static_cast<int>(c);
  }

  // Strong-coloring condition, with the merged class allowed up to t hits.
  for (const Constraint& c : instance.constraints) {
    std::map<int, int> per_class;
    for (int j : c.support) ++per_class[color[j]];
    for (const auto& [cls, hits] : per_class) {
      const int allowed =
          (family == CertFamily::Iqt && cls == merged) ? t : 1;
      if (hits > allowed) {
        fail("NotAStrongColoring",
             "a support meets class " + std::to_string(cls + 1) + " " +
                 std::to_string(hits) + " times");
      }
    }
  }

  if (family == CertFamily::Iqt) {
    for (const Word& row : m.rows) {
      if (row[merged] != 0) {
        fail("StructuralCheckFailed",
             "the merged class must receive the zero shift");
      }
    }
  }

  const long R = m.row_count();
  const int q = instance.q;

  // Per-constraint check that M projected onto the constraint's (relevant)
  // color indices is uniform, so every constraint contributes its table
  // mean to the shifted-multiset average.
  for (std::size_t i = 0; i < instance.constraints.size(); ++i) {
    const Constraint& c = instance.constraints[i];
    const std::string label = "constraint " + std::to_string(i + 1);

    if (family == CertFamily::Eq && !is_in_Eq(c.table)) {
      fail("StructuralCheckFailed", label + ": table not shift-invariant");
    }
    if (family == CertFamily::Iqt && !is_in_Iqt(c.table, t)) {
      fail("StructuralCheckFailed",
           label + ": table not balanced " + std::to_string(t) +
               "-wise independent");
    }

    std::set<int> cols_set;
    for (int j : c.support) {
      const int cls = color[j];
      if (family == CertFamily::Iqt && cls == merged) continue;
      cols_set.insert(cls);
    }
    const std::vector<int> cols(cols_set.begin(), cols_set.end());
    const int a = static_cast<int>(cols.size());
    if (a == 0) continue;

    std::map<Word, long> counts;
    for (const Word& row : m.rows) {
      Word v(a);
      for (int idx = 0; idx < a; ++idx) v[idx] = row[cols[idx]];
      if (family == CertFamily::Eq) v = shift_word(v, (q - v[0]) % q, q);
      ++counts[v];
    }
    const std::uint64_t cells =
        word_space_size(q, family == CertFamily::Eq ? a - 1 : a);
    if (R % static_cast<long>(cells) != 0 ||
        counts.size() != cells) {
      fail("StructuralCheckFailed", label + ": projection not uniform");
    }
    for (const auto& [v, count] : counts) {
      if (count != R / static_cast<long>(cells)) {
        fail("StructuralCheckFailed", label + ": projection not uniform");
      }
    }
  }

  // Spot-check: the average of the instance over the shifted multiset
  // { y(V, x, M_r) } equals the instance mean, for deterministic samples.
  const Rational mean = closed_form_mean(instance);
  for (int s = 0; s < options.sample_count; ++s) {
    Word x(instance.n);
    for (int j = 0; j < instance.n; ++j) {
      x[j] = static_cast<int>(
          splitmix64(static_cast<std::uint64_t>(s) * 0x10001ULL + j) % q);
    }
    Rational acc = 0;
    for (const Word& row : m.rows) {
      acc += evaluate(instance, y_partition(classes, x, row, q));
    }
    if (acc != mean * R) {
      fail("StructuralCheckFailed",
           "shifted-multiset mean deviates from the instance mean");
    }
  }

  if (family == CertFamily::Eq) {
    return q * shift_class_frequency(m).value(Word(m.nu, 0));
  }
  return frequency(m).value(Word(m.nu, 0));
}

CspInstance subinstance(const CspInstance& instance, const std::vector<int>& T,
                        const std::vector<std::vector<int>>* bijections) {
  check_instance(instance);
  if (T.empty()) fail("BadSubset", "symbol subset is empty");
  std::set<int> members;
  for (int s : T) {
    if (s < 0 || s >= instance.q) fail("BadSubset", "symbol out of range");
    if (!members.insert(s).second) fail("BadSubset", "duplicate symbol");
  }
  const int p = static_cast<int>(T.size());
  std::vector<int> sorted(members.begin(), members.end());

  // One bijection Sigma_p -> T per variable; order-preserving by default.
  std::vector<std::vector<int>> maps;
  if (bijections != nullptr) {
    if (static_cast<int>(bijections->size()) != instance.n) {
      fail("BadSubset", "one bijection per variable is required");
    }
    for (const std::vector<int>& b : *bijections) {
      if (static_cast<int>(b.size()) != p ||
          std::set<int>(b.begin(), b.end()) != members) {
        fail("BadSubset", "bijection is not onto the subset");
      }
    }
    maps = *bijections;
  } else {
    maps.assign(instance.n, sorted);
  }

  CspInstance out;
  out.q = p;
  out.n = instance.n;
  out.goal = instance.goal;
  for (const Constraint& c : instance.constraints) {
    Constraint restricted;
    restricted.support = c.support;
    restricted.weight = c.weight;
    restricted.table.q = p;
    restricted.table.arity = c.table.arity;
    Word z(c.table.arity, 0);
    Word w(c.table.arity);
    do {
      for (int i = 0; i < c.table.arity; ++i) {
        w[i] = maps[c.support[i]][z[i]];
      }
      restricted.table.values.push_back(c.table.at(w));
    } while (next_word(z, p));
    out.constraints.push_back(std::move(restricted));
  }
  check_instance(out);
  return out;
}

Word map_back(const std::vector<int>& T, const Word& z) {
  std::vector<int> sorted(T);
  std::sort(sorted.begin(), sorted.end());
  Word x(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j] < 0 || z[j] >= static_cast<int>(sorted.size())) {
      fail("BadSubset", "solution symbol outside the subset range");
    }
    x[j] = sorted[z[j]];
  }
  return x;
}

namespace {

Word run_base(const CspInstance& instance, BaseSolver base) {
  if (base == BaseSolver::brute) return brute_force(instance).argopt;
  return local_search(instance, Word(instance.n, 0), Neighborhood::B1);
}

bool improves(const CspInstance& instance, const Rational& candidate,
              const Rational& incumbent) {
  return instance.goal == Goal::max ? candidate > incumbent
                                    : candidate < incumbent;
}

}  // namespace

ReductionOutcome reduce_and_solve(const CspInstance& instance, int p,
                                  const ArrayPair* pair, BaseSolver base) {
  check_instance(instance);
  const int q = instance.q;
  if (p < 1 || p > q) fail("BadArgs", "need 1 <= p <= q");
  const int k = std::max(1, instance.max_arity());
  if (k > p) {
    fail("ArityExceedsP",
         "constraint arity " + std::to_string(k) + " exceeds p = " +
             std::to_string(p));
  }

  ReductionOutcome outcome;

  if (p == q) {
    Word z = run_base(instance, base);
    outcome.best_solution = z;
    outcome.best_value = evaluate(instance, z);
    outcome.certified_ratio = 1;
    outcome.subinstances_solved = 1;
    std::vector<int> all(q);
    for (int s = 0; s < q; ++s) all[s] = s;
    outcome.subsets.push_back(all);
    outcome.subset_values.push_back(outcome.best_value);
    return outcome;
  }

  ArrayPair chosen;
  if (pair != nullptr) {
    chosen = *pair;
  } else if (p == k) {
    chosen = build_arpa(q, k).first;
  } else {
    chosen = pad_arpa(build_arpa(q - p + k, k).first, q, p, k);
  }
  PairCertificate cert;
  try {
    cert = verify_arpa(chosen, q, p, k);
  } catch (const Error& e) {
    fail("NotAnArpa", std::string("supplied pair failed verification: ") +
                          e.what());
  }
  outcome.certified_ratio = Rational(Integer(cert.R_star), Integer(cert.R));

  // Subset family: the distinct symbols of each Psi-row, padded with the
  // smallest unused symbols up to size p, deduplicated.
  std::set<std::vector<int>> family;
  for (const Word& row : chosen.psi.rows) {
    std::set<int> symbols(row.begin(), row.end());
    for (int s = 0; static_cast<int>(symbols.size()) < p; ++s) {
      symbols.insert(s);
    }
    family.insert(std::vector<int>(symbols.begin(), symbols.end()));
  }

  bool have_best = false;
  for (const std::vector<int>& T : family) {
    CspInstance sub = subinstance(instance, T);
    Word z = run_base(sub, base);
    Word x = map_back(T, z);
    Rational value = evaluate(instance, x);
    outcome.subsets.push_back(T);
    outcome.subset_values.push_back(value);
    ++outcome.subinstances_solved;
    if (!have_best || improves(instance, value, outcome.best_value) ||
        (value == outcome.best_value && x < outcome.best_solution)) {
      have_best = true;
      outcome.best_solution = x;
      outcome.best_value = value;
    }
  }
  if (!have_best) fail("Internal", "the subset family is empty");
  return outcome;
}

CspInstance enlarge_alphabet(const CspInstance& instance, int d,
                             const std::vector<std::vector<int>>& maps) {
  check_instance(instance);
  if (d <= instance.q) fail("BadArgs", "the target alphabet must be larger");
  if (static_cast<int>(maps.size()) != instance.n) {
    fail("ShapeMismatch", "one surjection per variable is required");
  }
  for (const std::vector<int>& map : maps) {
    if (static_cast<int>(map.size()) != d) {
      fail("ShapeMismatch", "each surjection must be defined on Sigma_d");
    }
    std::vector<bool> hit(instance.q, false);
    for (int s : map) {
      if (s < 0 || s >= instance.q) {
        fail("ShapeMismatch", "surjection value out of range");
      }
      hit[s] = true;
    }
    for (bool h : hit) {
      if (!h) fail("NotSurjective", "a symbol is never reached");
    }
  }

  CspInstance out;
  out.q = d;
  out.n = instance.n;
  out.goal = instance.goal;
  for (const Constraint& c : instance.constraints) {
    word_space_size(d, c.table.arity, enumeration_budget());
    Constraint lifted;
    lifted.support = c.support;
    lifted.weight = c.weight;
    lifted.table.q = d;
    lifted.table.arity = c.table.arity;
    Word z(c.table.arity, 0);
    Word w(c.table.arity);
    do {
      for (int i = 0; i < c.table.arity; ++i) {
        w[i] = maps[c.support[i]][z[i]];
      }
      lifted.table.values.push_back(c.table.at(w));
    } while (next_word(z, d));
    out.constraints.push_back(std::move(lifted));
  }
  check_instance(out);
  return out;
}

Word pull_back(const std::vector<std::vector<int>>& maps, const Word& z) {
  if (maps.size() != z.size()) {
    fail("ShapeMismatch", "one surjection per coordinate is required");
  }
  Word x(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j] < 0 || z[j] >= static_cast<int>(maps[j].size())) {
      fail("ShapeMismatch", "symbol outside the surjection domain");
    }
    x[j] = maps[j][z[j]];
  }
  return x;
}

}  // namespace oadiff
