// ---------------------------------------------------------------------------
// neighborhood.hpp -- Hamming balls, local search and the ball identities.
//
// Radius-1 local search carries exact guarantees on instances whose
// constraints are balanced (k-1)-wise independent of arity k; exact best-
// in-ball and diameter-spread computations realize the cover-pair bounds;
// and the alternating-sum identity expresses any solution value as a linear
// combination of values inside a radius-k ball around a distant solution.
// ---------------------------------------------------------------------------
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "oadiff/csp.hpp"

namespace oadiff {

enum class ShiftMode { none, all_uniform_shifts };

struct BallSpec {
  Word center;
  int radius = 0;
  ShiftMode shifted = ShiftMode::none;
};

// Members of the (possibly shift-closed) Hamming ball, each exactly once,
// in lexicographic order.
std::vector<Word> ball_members(const BallSpec& spec, int q);

// Expected plain-ball cardinality: sum_{i<=radius} C(n,i) (q-1)^i.
Integer ball_size(int n, int q, int radius);

enum class Neighborhood { B1, tildeB1 };

// First-improvement local search scanning neighbors in deterministic
// (shift, coordinate, symbol) order; `visitor`, when given, is called on
// every accepted iterate (including the start and the final optimum).
Word local_search(const CspInstance& instance, const Word& start,
                  Neighborhood neighborhood,
                  const std::function<void(const Word&)>& visitor = nullptr);

// Exact optimum over a ball (ties: lexicographically smallest member).
std::pair<Word, Rational> best_in_ball(const CspInstance& instance,
                                       const BallSpec& spec);

// (max - min over the ball) / (opt - wor); Error("DegenerateDiameter") when
// the instance diameter is zero.
Rational ball_diameter_spread(const CspInstance& instance,
                              const BallSpec& spec);

// Vectors agreeing with x or x* at every coordinate, at Hamming distance
// exactly h from x.
std::vector<Word> n_h_set(const Word& x_star, const Word& x, int h);

// Exact check of the alternating-sum identity
//   v(I, x*) = sum_{h=0..k} (-1)^{k-h} C(kappa-1-h, k-h)
//              sum_{y in N^h(x*, x)} v(I, y)
// for kappa = d_H(x, x*) > k.
bool identity_check(const CspInstance& instance, const Word& x_star,
                    const Word& x, int k);

}  // namespace oadiff
