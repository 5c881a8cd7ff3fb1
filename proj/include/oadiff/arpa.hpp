// ---------------------------------------------------------------------------
// arpa.hpp -- alphabet-reduction and cover pairs of arrays.
//
// An alphabet-reduction pair (Psi, Phi) over Sigma_q with q columns lets a
// CSP over q symbols be approximated through CSPs over p < q symbols: Phi
// contains the identity row (0,1,...,q-1) with multiplicity R*, every
// Psi-row uses at most p distinct symbols, and the difference of the two
// empirical frequency functions is balanced k-wise independent.  Cover
// pairs are the Boolean analogue (rows of bounded Hamming weight, all-ones
// identity row).  This header provides the T/S counting numbers, the
// inductive constructions, the Boolean projection sigma_n, and verifiers
// that certify a pair's (R, R*) parameters.
// ---------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "oadiff/symbol_array.hpp"

namespace oadiff {

struct ArrayPair {
  SymbolArray psi;
  SymbolArray phi;
};

enum class PairKind { arpa, relaxed_arpa, cpa, bar_cpa };

struct PairCertificate {
  PairKind kind = PairKind::arpa;
  int alphabet_or_n = 0;  // q for ARPAs, n for CPAs
  int p_or_d = 0;         // symbol budget p, resp. weight budget d
  int k = 0;              // independence strength
  long R = 0;             // common row count
  long R_star = 0;        // identity-row multiplicity
};

// T(a, b) = sum_r C(a, r) * C(a-1-r, b-r); requires a > b >= 0.
Integer t_number(long a, long b);

// S(a, b, c) = sum_r (-1)^r C(a, r) * C(b-r, c-r); requires c <= b.
Integer s_number(long a, long b, long c);

// Word of Sigma_q^{q-1} with position j carrying j if j is in J, else q-1.
Word alpha_word(int q, const std::vector<int>& J);

// One inductive extension step: turns a verified (q-1, k)-pair of strength k
// into a (q, k)-pair of strength k with R' = R + R* * T(q-1, k-1) rows.
ArrayPair extend_arpa(const ArrayPair& pair, int k);

// Iterated extension from the trivial pair {(0,...,k-1)}; yields a pair with
// R = (T(q,k)+1)/2 rows and R* = 1.
std::pair<ArrayPair, PairCertificate> build_arpa(int q, int k);

// Append the fixed suffix (q-p+k, ..., q-1) to every row of a verified
// (q-p+k, k)-pair, producing a (q, p)-pair of the same strength.
ArrayPair pad_arpa(const ArrayPair& pair, int q, int p, int k);

// Verifiers: throw Error("MissingIdentityRow" | "PsiRowTooRich" |
// "NotBalanced" | "PhiRowWeightViolation" | ...) with a witness, or return
// the certificate with the pair's concrete (R, R*).
PairCertificate verify_arpa(const ArrayPair& pair, int q, int p, int k);
PairCertificate verify_relaxed_arpa(const ArrayPair& pair, int q, int p,
                                    int k);
PairCertificate verify_cpa(const ArrayPair& pair, int n, int d, int k);
PairCertificate verify_bar_cpa(const ArrayPair& pair, int n, int d, int k);

// Boolean projection: entry (r, j) = 1 iff the (r, j) entry of m equals j.
// Requires q == nu; maps (n,d)-reduction pairs to cover pairs.
SymbolArray sigma_n(const SymbolArray& m);

// Direct Boolean construction (equivalent to sigma_n of build_arpa up to row
// order): R = (T(n,k)+1)/2, one all-ones row in Phi.
std::pair<ArrayPair, PairCertificate> build_cpa(int n, int k);

}  // namespace oadiff
