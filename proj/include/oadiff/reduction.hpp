// ---------------------------------------------------------------------------
// reduction.hpp -- partition-shift certificates and alphabet reductions.
//
// Three mechanisms connect CSP instances to the design machinery:
//  * average_certificate: a strong coloring plus a suitable array yield an
//    exact lower bound on the average differential ratio (the array's
//    maximum zero-word frequency), verified structurally per constraint;
//  * reduce_and_solve: a (q,p)-alphabet-reduction pair turns solutions of
//    the p-symbol subinstances I(T) into a solution of I whose differential
//    ratio is at least R*/R times the base solver's guarantee;
//  * enlarge_alphabet: value-preserving transport of an instance to a
//    larger alphabet through per-variable surjections.
// ---------------------------------------------------------------------------
#pragma once

#include <functional>
#include <vector>

#include "oadiff/csp.hpp"
#include "oadiff/arpa.hpp"
#include "oadiff/symbol_array.hpp"

namespace oadiff {

// Shift the coordinates of x lying in class V_c by u_c (mod q).
Word y_partition(const std::vector<std::vector<int>>& classes, const Word& x,
                 const Word& u, int q);

// Relabel solution coordinates through a q-column word: y(x, u)_j = u[x_j].
Word y_relabel(const Word& x, const Word& u);

enum class CertFamily { general, Eq, Iqt };

struct CertificateOptions {
  int t = 0;             // strength for family Iqt
  int sample_count = 8;  // how many solutions to spot-check exactly
};

// Verifies, per constraint, that the projection of M onto the constraint's
// color classes is uniform (general: over all words; Eq: over shift
// classes; Iqt: on the non-aggregated classes, with the last t classes of
// the coloring merged and M's last column all zero), then returns the
// certified lower bound on the average differential ratio: mu^M(0) for
// general/Iqt, q * mu^M_E(0) for Eq.  Also spot-checks that the mean over
// the partition-shifted multiset { y(V, x, M_r) } equals the instance mean
// for a deterministic sample of x.
Rational average_certificate(const CspInstance& instance,
                             const std::vector<std::vector<int>>& classes,
                             const SymbolArray& m, CertFamily family,
                             const CertificateOptions& options = {});

// Restriction of the instance to the symbol subset T (|T| = p) through one
// order-preserving (or caller-supplied) bijection Sigma_p -> T per variable.
CspInstance subinstance(const CspInstance& instance, const std::vector<int>& T,
                        const std::vector<std::vector<int>>* bijections = nullptr);

// Map a subinstance solution back to the original alphabet.
Word map_back(const std::vector<int>& T, const Word& z);

enum class BaseSolver { brute, local_search };

struct ReductionOutcome {
  Word best_solution;
  Rational best_value = 0;
  Rational certified_ratio = 0;  // R*/R of the pair used
  long subinstances_solved = 0;
  std::vector<std::vector<int>> subsets;   // the family T derived from Psi
  std::vector<Rational> subset_values;     // value on I of each T's solution
};

// Solve I through its p-symbol subinstances using a verified (q,p)-pair of
// strength >= max arity (pass nullptr to build the default pair).
ReductionOutcome reduce_and_solve(const CspInstance& instance, int p,
                                  const ArrayPair* pair = nullptr,
                                  BaseSolver base = BaseSolver::brute);

// Transport to a larger alphabet d > q through per-variable surjections
// maps[j] : Sigma_d -> Sigma_q; solution values are preserved pointwise.
CspInstance enlarge_alphabet(const CspInstance& instance, int d,
                             const std::vector<std::vector<int>>& maps);
Word pull_back(const std::vector<std::vector<int>>& maps, const Word& z);

}  // namespace oadiff
