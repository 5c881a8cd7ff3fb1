// ---------------------------------------------------------------------------
// arpa.cpp -- counting numbers, pair constructions and pair verification.
// ---------------------------------------------------------------------------
#include "oadiff/arpa.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "oadiff/designs.hpp"
#include "oadiff/errors.hpp"

namespace oadiff {

namespace {

std::string word_str(const Word& w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << w[i];
  }
  out << ")";
  return out.str();
}

std::string index_set_str(const std::vector<int>& J) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) out << ",";
    out << J[i];
  }
  out << "}";
  return out.str();
}

Word identity_word(int q) {
  Word w(q);
  for (int j = 0; j < q; ++j) w[j] = j;
  return w;
}

int row_weight(const Word& row) {
  int weight = 0;
  for (int e : row) weight += (e != 0) ? 1 : 0;
  return weight;
}

void check_pair_shape(const ArrayPair& pair) {
  check_array(pair.psi);
  check_array(pair.phi);
  if (pair.psi.q != pair.phi.q || pair.psi.nu != pair.phi.nu) {
    fail("ShapeMismatch", "the two halves live on different word spaces");
  }
  if (pair.psi.row_count() != pair.phi.row_count()) {
    fail("ShapeMismatch", "the two halves have different row counts");
  }
  if (pair.psi.rows.empty()) fail("EmptyArray", "pairs need at least one row");
}

// Scan the k-margins of f (which must have total mass 0) and fail with the
// lexicographically first violating witness (J, v).
void check_zero_margins(const FrequencyFunction& f, int k) {
  for_each_combination(f.nu, k, [&](const std::vector<int>& J) {
    std::map<Word, Rational> margins;
    for (const auto& [word, value] : f.support) {
      Word v(J.size());
      for (std::size_t i = 0; i < J.size(); ++i) v[i] = word[J[i]];
      margins[v] += value;
    }
    for (const auto& [v, sum] : margins) {
      if (sum != 0) {
        fail("NotBalanced", "margin over columns " + index_set_str(J) +
                                " at word " + word_str(v) +
                                " is nonzero: " + rational_str(sum));
      }
    }
  });
}

}  // namespace

Integer t_number(long a, long b) {
  if (b < 0 || a <= b) fail("BadArgs", "t_number needs a > b >= 0");
  Integer sum = 0;
  for (long r = 0; r <= b; ++r) {
    sum += binomial(a, r) * binomial(a - 1 - r, b - r);
  }
  return sum;
}

Integer s_number(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0 || c > b) {
    fail("BadArgs", "s_number needs a, b, c >= 0 and c <= b");
  }
  Integer sum = 0;
  for (long r = 0; r <= a && r <= c; ++r) {
    Integer term = binomial(a, r) * binomial(b - r, c - r);
    if (r % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Word alpha_word(int q, const std::vector<int>& J) {
  Word w(q - 1, q - 1);
  for (int j : J) {
    if (j < 0 || j > q - 2) {
      fail("IndexOutOfRange",
           "index " + std::to_string(j) + " outside Sigma_" + std::to_string(q - 1));
    }
    w[j] = j;
  }
  return w;
}

ArrayPair extend_arpa(const ArrayPair& pair, int k) {
  const int q_old = pair.psi.q;
  const int q = q_old + 1;
  long r_star = 0;
  try {
    PairCertificate cert = verify_arpa(pair, q_old, k, k);
    r_star = cert.R_star;
  } catch (const Error& e) {
    fail("NotAnArpa", std::string("input pair fails verification: ") + e.what());
  }

  ArrayPair out;
  out.psi.q = out.phi.q = q;
  out.psi.nu = out.phi.nu = q;

  // Step 1: duplicate the first column into a new q-th column.
  for (const Word& row : pair.psi.rows) {
    Word extended = row;
    extended.push_back(row[0]);
    out.psi.rows.push_back(std::move(extended));
  }
  const Word old_identity_ext = [&] {
    Word w = identity_word(q_old);
    w.push_back(0);
    return w;
  }();
  const Word new_identity = identity_word(q);
  for (const Word& row : pair.phi.rows) {
    Word extended = row;
    extended.push_back(row[0]);
    // Step 2: promote extended identity rows to the new identity.
    if (extended == old_identity_ext) extended = new_identity;
    out.phi.rows.push_back(std::move(extended));
  }

  // Step 3: insert the alpha-rows, h = k-1 down to 0, subsets lexicographic.
  for (int h = k - 1; h >= 0; --h) {
    const Integer count_big = binomial(q - h - 2, k - h - 1) * Integer(r_star);
    const long count = count_big.get_si();
    for (const std::vector<int>& J : subsets_of_size(q - 1, h)) {
      Word base = alpha_word(q, J);
      Word with_top = base;
      with_top.push_back(q - 1);
      Word with_zero = base;
      with_zero.push_back(0);
      const bool top_in_psi = ((h % 2) == ((k - 1) % 2));
      for (long c = 0; c < count; ++c) {
        if (top_in_psi) {
          out.psi.rows.push_back(with_top);
          out.phi.rows.push_back(with_zero);
        } else {
          out.phi.rows.push_back(with_top);
          out.psi.rows.push_back(with_zero);
        }
      }
    }
  }
  return out;
}

std::pair<ArrayPair, PairCertificate> build_arpa(int q, int k) {
  if (k < 1 || q < k || q < 2) {
    fail("BadArgs", "build_arpa needs q >= max(k, 2) and k >= 1");
  }
  ArrayPair pair;
  int reached;  // alphabet size of the current pair
  if (k >= 2) {
    pair.psi.q = pair.phi.q = k;
    pair.psi.nu = pair.phi.nu = k;
    pair.psi.rows = {identity_word(k)};
    pair.phi.rows = {identity_word(k)};
    reached = k;
  } else {
    // k = 1: the (1,1) seed is not representable (alphabet of size 1), so
    // start from the explicit (2,1)-pair the extension step would produce.
    pair.psi.q = pair.phi.q = 2;
    pair.psi.nu = pair.phi.nu = 2;
    pair.psi.rows = {{0, 0}, {1, 1}};
    pair.phi.rows = {{0, 1}, {1, 0}};
    reached = 2;
  }
  for (int i = reached + 1; i <= q; ++i) {
    pair = extend_arpa(pair, k);
    // Invariant along the induction: R = (T(i, k) + 1) / 2.
    const Integer expected = (t_number(i, k) + 1) / 2;
    if (Integer(pair.psi.row_count()) != expected) {
      fail("Internal", "row-count invariant broken at alphabet " +
                           std::to_string(i));
    }
  }
  PairCertificate cert = verify_arpa(pair, q, k, k);
  return {pair, cert};
}

ArrayPair pad_arpa(const ArrayPair& pair, int q, int p, int k) {
  if (p <= k) fail("BadArgs", "pad_arpa needs p > k");
  const int q_small = q - p + k;
  try {
    verify_arpa(pair, q_small, k, k);
  } catch (const Error& e) {
    fail("NotAnArpa", std::string("input pair fails verification: ") + e.what());
  }
  ArrayPair out;
  out.psi.q = out.phi.q = q;
  out.psi.nu = out.phi.nu = q;
  Word suffix;
  for (int s = q_small; s < q; ++s) suffix.push_back(s);
  auto extend_all = [&](const SymbolArray& in, SymbolArray& target) {
    for (const Word& row : in.rows) {
      Word extended = row;
      extended.insert(extended.end(), suffix.begin(), suffix.end());
      target.rows.push_back(std::move(extended));
    }
  };
  extend_all(pair.psi, out.psi);
  extend_all(pair.phi, out.phi);
  return out;
}

PairCertificate verify_arpa(const ArrayPair& pair, int q, int p, int k) {
  check_pair_shape(pair);
  if (pair.psi.q != q || pair.psi.nu != q) {
    fail("ShapeMismatch", "expected q columns over Sigma_q with q = " +
                              std::to_string(q));
  }
  if (k < 1 || k > q) fail("BadStrength", "need 1 <= k <= q");
  if (p < 1 || p > q) fail("BadArgs", "need 1 <= p <= q");

  const Word identity = identity_word(q);
  long r_star = 0;
  for (const Word& row : pair.phi.rows) {
    if (row == identity) ++r_star;
  }
  if (r_star == 0) {
    fail("MissingIdentityRow", "no row (0,1,...,q-1) in the second half");
  }
  for (std::size_t r = 0; r < pair.psi.rows.size(); ++r) {
    if (distinct_symbols(pair.psi.rows[r]) > p) {
      fail("PsiRowTooRich", "row " + std::to_string(r) + " uses more than " +
                                std::to_string(p) + " distinct symbols");
    }
  }
  check_zero_margins(difference(frequency(pair.psi), frequency(pair.phi)), k);

  PairCertificate cert;
  cert.kind = PairKind::arpa;
  cert.alphabet_or_n = q;
  cert.p_or_d = p;
  cert.k = k;
  cert.R = pair.psi.row_count();
  cert.R_star = r_star;
  return cert;
}

PairCertificate verify_relaxed_arpa(const ArrayPair& pair, int q, int p,
                                    int k) {
  check_pair_shape(pair);
  if (pair.psi.q != q || pair.psi.nu != q) {
    fail("ShapeMismatch", "expected q columns over Sigma_q with q = " +
                              std::to_string(q));
  }
  if (k < 1 || k > q) fail("BadStrength", "need 1 <= k <= q");
  if (p < 1 || p > q) fail("BadArgs", "need 1 <= p <= q");

  const Word identity = identity_word(q);
  long r_star = 0;
  for (const Word& row : pair.phi.rows) {
    for (int a = 0; a < q; ++a) {
      if (row == shift_word(identity, a, q)) {
        ++r_star;
        break;
      }
    }
  }
  if (r_star == 0) {
    fail("MissingIdentityRow",
         "no uniformly shifted identity row in the second half");
  }
  for (std::size_t r = 0; r < pair.psi.rows.size(); ++r) {
    if (distinct_symbols(pair.psi.rows[r]) > p) {
      fail("PsiRowTooRich", "row " + std::to_string(r) + " uses more than " +
                                std::to_string(p) + " distinct symbols");
    }
  }
  check_zero_margins(difference(shift_class_frequency(pair.psi),
                                shift_class_frequency(pair.phi)),
                     k);

  PairCertificate cert;
  cert.kind = PairKind::relaxed_arpa;
  cert.alphabet_or_n = q;
  cert.p_or_d = p;
  cert.k = k;
  cert.R = pair.psi.row_count();
  cert.R_star = r_star;
  return cert;
}

PairCertificate verify_cpa(const ArrayPair& pair, int n, int d, int k) {
  check_pair_shape(pair);
  if (pair.psi.q != 2 || pair.psi.nu != n) {
    fail("ShapeMismatch",
         "expected a Boolean pair with " + std::to_string(n) + " columns");
  }
  if (k < 1 || k > n) fail("BadStrength", "need 1 <= k <= n");
  if (d < 1 || d > n) fail("BadArgs", "need 1 <= d <= n");

  long r_star = 0;
  for (const Word& row : pair.phi.rows) {
    if (row_weight(row) == n) ++r_star;
  }
  if (r_star == 0) {
    fail("MissingIdentityRow", "no all-ones row in the second half");
  }
  for (std::size_t r = 0; r < pair.psi.rows.size(); ++r) {
    if (row_weight(pair.psi.rows[r]) > d) {
      fail("PsiRowTooRich", "row " + std::to_string(r) + " has more than " +
                                std::to_string(d) + " ones");
    }
  }
  check_zero_margins(difference(frequency(pair.psi), frequency(pair.phi)), k);

  PairCertificate cert;
  cert.kind = PairKind::cpa;
  cert.alphabet_or_n = n;
  cert.p_or_d = d;
  cert.k = k;
  cert.R = pair.psi.row_count();
  cert.R_star = r_star;
  return cert;
}

PairCertificate verify_bar_cpa(const ArrayPair& pair, int n, int d, int k) {
  PairCertificate cert = verify_cpa(pair, n, d, k);
  for (std::size_t r = 0; r < pair.phi.rows.size(); ++r) {
    const int weight = row_weight(pair.phi.rows[r]);
    if (weight != n && weight > d) {
      fail("PhiRowWeightViolation",
           "row " + std::to_string(r) + " has weight " + std::to_string(weight) +
               ", neither n nor <= " + std::to_string(d));
    }
  }
  cert.kind = PairKind::bar_cpa;
  return cert;
}

SymbolArray sigma_n(const SymbolArray& m) {
  check_array(m);
  if (m.q != m.nu) {
    fail("AlphabetMismatch",
         "the Boolean projection needs alphabet size equal to column count");
  }
  SymbolArray out;
  out.q = 2;
  out.nu = m.nu;
  for (const Word& row : m.rows) {
    Word image(m.nu);
    for (int j = 0; j < m.nu; ++j) image[j] = (row[j] == j) ? 1 : 0;
    out.rows.push_back(std::move(image));
  }
  return out;
}

std::pair<ArrayPair, PairCertificate> build_cpa(int n, int k) {
  if (k < 1 || n <= k) fail("BadArgs", "build_cpa needs n > k >= 1");
  ArrayPair pair;
  pair.psi.q = pair.phi.q = 2;
  pair.psi.nu = pair.phi.nu = k;
  pair.psi.rows = {Word(k, 1)};
  pair.phi.rows = {Word(k, 1)};  // first row of Phi stays the all-ones row

  for (int i = k + 1; i <= n; ++i) {
    for (Word& row : pair.psi.rows) row.push_back(0);
    for (Word& row : pair.phi.rows) row.push_back(0);
    pair.psi.nu = pair.phi.nu = i;
    pair.phi.rows[0][i - 1] = 1;
    // Subsets of the first i-1 positions, by size then lexicographically.
    for (int size = 0; size < k; ++size) {
      const long count = binomial(i - 2 - size, k - 1 - size).get_si();
      for (const std::vector<int>& J : subsets_of_size(i - 1, size)) {
        Word without(i, 0);
        for (int j : J) without[j] = 1;
        Word with = without;
        with[i - 1] = 1;
        const bool with_in_psi = (size % 2) != (k % 2);
        for (long c = 0; c < count; ++c) {
          (with_in_psi ? pair.psi : pair.phi).rows.push_back(with);
          (with_in_psi ? pair.phi : pair.psi).rows.push_back(without);
        }
      }
    }
  }
  const Integer expected = (t_number(n, k) + 1) / 2;
  if (Integer(pair.psi.row_count()) != expected) {
    fail("Internal", "cover-pair row-count invariant broken");
  }
  PairCertificate cert = verify_bar_cpa(pair, n, k, k);
  return {pair, cert};
}

}  // namespace oadiff
