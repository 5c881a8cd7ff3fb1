// ---------------------------------------------------------------------------
// neighborhood.cpp -- Hamming balls, local search and the ball identities.
// ---------------------------------------------------------------------------
#include <algorithm>
#include <set>

#include "oadiff/neighborhood.hpp"

#include "oadiff/budget.hpp"
#include "oadiff/errors.hpp"

namespace oadiff {

namespace {

void check_spec(const BallSpec& spec, int q) {
  const int n = static_cast<int>(spec.center.size());
  if (n < 1) fail("BadRadius", "empty center");
  if (spec.radius < 0 || spec.radius > n) {
    fail("BadRadius", "radius must lie in [0, n]");
  }
  for (int s : spec.center) {
    if (s < 0 || s >= q) fail("SymbolOutOfRange", "center symbol");
  }
}

// Depth-first enumeration of the plain radius-d ball in lexicographic
// order: at each coordinate try the symbols in increasing order, spending
// one unit of budget when deviating from the center.
void collect_ball(const Word& center, int q, int budget, std::size_t pos,
                  Word& current, std::vector<Word>& out) {
  if (pos == center.size()) {
    out.push_back(current);
    return;
  }
  for (int s = 0; s < q; ++s) {
    const int cost = s == center[pos] ? 0 : 1;
    if (cost > budget) {
      if (s < center[pos]) continue;  // the center symbol is still ahead
      break;
    }
    current[pos] = s;
    collect_ball(center, q, budget - cost, pos + 1, current, out);
  }
}

}  // namespace

std::vector<Word> ball_members(const BallSpec& spec, int q) {
  check_spec(spec, q);
  const int n = static_cast<int>(spec.center.size());
  Integer size = ball_size(n, q, spec.radius);
  if (spec.shifted == ShiftMode::all_uniform_shifts) size *= q;
  if (size > Integer(static_cast<unsigned long>(enumeration_budget()))) {
    fail("Budget", "ball too large to enumerate");
  }

  if (spec.shifted == ShiftMode::none) {
    std::vector<Word> members;
    Word current(n);
    collect_ball(spec.center, q, spec.radius, 0, current, members);
    return members;
  }
  std::set<Word> members;
  for (int a = 0; a < q; ++a) {
    std::vector<Word> part;
    Word current(n);
    const Word shifted_center = shift_word(spec.center, a, q);
    collect_ball(shifted_center, q, spec.radius, 0, current, part);
    members.insert(part.begin(), part.end());
  }
  return std::vector<Word>(members.begin(), members.end());
}

Integer ball_size(int n, int q, int radius) {
  if (radius < 0 || radius > n) fail("BadRadius", "radius must lie in [0, n]");
  Integer total = 0;
  Integer step = 1;  // (q-1)^i
  for (int i = 0; i <= radius; ++i) {
    total += binomial(n, i) * step;
    step *= q - 1;
  }
  return total;
}

Word local_search(const CspInstance& instance, const Word& start,
                  Neighborhood neighborhood,
                  const std::function<void(const Word&)>& visitor) {
  check_instance(instance);
  if (static_cast<int>(start.size()) != instance.n) {
    fail("ShapeMismatch", "start point has the wrong length");
  }
  const int q = instance.q;
  const int shifts =
      neighborhood == Neighborhood::tildeB1 ? q : 1;

  Word x = start;
  Rational value = evaluate(instance, x);
  if (visitor) visitor(x);

  auto better = [&](const Rational& a, const Rational& b) {
    return instance.goal == Goal::max ? a > b : a < b;
  };

  bool improved = true;
  while (improved) {
    improved = false;
    for (int a = 0; a < shifts && !improved; ++a) {
      const Word base = shift_word(x, a, q);
      for (int j = 0; j < instance.n && !improved; ++j) {
        for (int s = 0; s < q && !improved; ++s) {
          Word y = base;
          y[j] = s;
          if (y == x) continue;
          Rational candidate = evaluate(instance, y);
          if (better(candidate, value)) {
            x = std::move(y);
            value = std::move(candidate);
            if (visitor) visitor(x);
            improved = true;
          }
        }
      }
    }
  }
  return x;
}

std::pair<Word, Rational> best_in_ball(const CspInstance& instance,
                                       const BallSpec& spec) {
  check_instance(instance);
  if (static_cast<int>(spec.center.size()) != instance.n) {
    fail("ShapeMismatch", "center has the wrong length");
  }
  const std::vector<Word> members = ball_members(spec, instance.q);
  std::pair<Word, Rational> best;
  bool have = false;
  for (const Word& y : members) {
    Rational value = evaluate(instance, y);
    const bool wins = !have || (instance.goal == Goal::max
                                    ? value > best.second
                                    : value < best.second);
    if (wins) {
      best = {y, std::move(value)};
      have = true;
    }
  }
  return best;
}

Rational ball_diameter_spread(const CspInstance& instance,
                              const BallSpec& spec) {
  check_instance(instance);
  if (static_cast<int>(spec.center.size()) != instance.n) {
    fail("ShapeMismatch", "center has the wrong length");
  }
  const OracleReport oracle = brute_force(instance);
  if (oracle.opt == oracle.wor) {
    fail("DegenerateDiameter", "the instance diameter is zero");
  }
  const std::vector<Word> members = ball_members(spec, instance.q);
  Rational lo = 0, hi = 0;
  bool have = false;
  for (const Word& y : members) {
    Rational value = evaluate(instance, y);
    if (!have) {
      lo = hi = value;
      have = true;
    } else {
      if (value < lo) lo = value;
      if (value > hi) hi = value;
    }
  }
  Rational diameter = oracle.goal == Goal::max ? oracle.opt - oracle.wor
                                               : oracle.wor - oracle.opt;
  if (diameter < 0) diameter = -diameter;
  return (hi - lo) / diameter;
}

std::vector<Word> n_h_set(const Word& x_star, const Word& x, int h) {
  if (x_star.size() != x.size()) fail("ShapeMismatch", "length mismatch");
  if (h < 0) fail("BadArgs", "h must be nonnegative");
  std::vector<int> diff;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != x_star[j]) diff.push_back(static_cast<int>(j));
  }
  std::vector<Word> members;
  if (h > static_cast<int>(diff.size())) return members;
  for_each_combination(static_cast<int>(diff.size()), h,
                       [&](const std::vector<int>& picks) {
                         Word y = x;
                         for (int i : picks) y[diff[i]] = x_star[diff[i]];
                         members.push_back(std::move(y));
                       });
  return members;
}

bool identity_check(const CspInstance& instance, const Word& x_star,
                    const Word& x, int k) {
  check_instance(instance);
  if (static_cast<int>(x.size()) != instance.n ||
      static_cast<int>(x_star.size()) != instance.n) {
    fail("ShapeMismatch", "solution length mismatch");
  }
  if (k < 0) fail("BadArgs", "k must be nonnegative");
  const int kappa = hamming_distance(x, x_star);
  if (kappa <= k) {
    fail("DistanceTooSmall", "the Hamming distance must exceed k");
  }
  Rational rhs = 0;
  for (int h = 0; h <= k; ++h) {
    Rational coef = Rational(binomial(kappa - 1 - h, k - h));
    if ((k - h) % 2 != 0) coef = -coef;
    Rational inner = 0;
    for (const Word& y : n_h_set(x_star, x, h)) {
      inner += evaluate(instance, y);
    }
    rhs += coef * inner;
  }
  return evaluate(instance, x_star) == rhs;
}

}  // namespace oadiff
