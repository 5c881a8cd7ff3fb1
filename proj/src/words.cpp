// ---------------------------------------------------------------------------
// words.cpp -- word enumeration and index-set combinatorics.
// ---------------------------------------------------------------------------
#include "oadiff/words.hpp"

#include <algorithm>
#include <set>

#include "oadiff/errors.hpp"

namespace oadiff {

std::uint64_t word_space_size(int q, int len, std::uint64_t limit) {
  std::uint64_t size = 1;
  for (int i = 0; i < len; ++i) {
    if (limit != 0 && size > limit / static_cast<std::uint64_t>(q)) {
      fail("Budget", "word space " + std::to_string(q) + "^" +
                         std::to_string(len) + " exceeds the budget");
    }
    size *= static_cast<std::uint64_t>(q);
  }
  if (limit != 0 && size > limit) {
    fail("Budget", "word space exceeds the budget");
  }
  return size;
}

std::uint64_t word_index(const Word& w, int q) {
  std::uint64_t index = 0;
  for (int symbol : w) index = index * static_cast<std::uint64_t>(q) + symbol;
  return index;
}

Word word_at(std::uint64_t index, int q, int len) {
  Word w(len, 0);
  for (int j = len - 1; j >= 0; --j) {
    w[j] = static_cast<int>(index % q);
    index /= q;
  }
  return w;
}

bool next_word(Word& w, int q) {
  for (int j = static_cast<int>(w.size()) - 1; j >= 0; --j) {
    if (++w[j] < q) return true;
    w[j] = 0;
  }
  return false;
}

void for_each_combination(
    int n, int t, const std::function<void(const std::vector<int>&)>& fn) {
  if (t < 0 || t > n) return;
  std::vector<int> J(t);
  for (int i = 0; i < t; ++i) J[i] = i;
  while (true) {
    fn(J);
    int i = t - 1;
    while (i >= 0 && J[i] == n - t + i) --i;
    if (i < 0) break;
    ++J[i];
    for (int l = i + 1; l < t; ++l) J[l] = J[l - 1] + 1;
  }
}

std::vector<std::vector<int>> subsets_of_size(int n, int size) {
  std::vector<std::vector<int>> result;
  for_each_combination(n, size,
                       [&](const std::vector<int>& J) { result.push_back(J); });
  return result;
}

Word shift_word(const Word& w, int shift, int q) {
  Word out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    out[j] = (w[j] + shift) % q;
  }
  return out;
}

int hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) fail("ShapeMismatch", "word lengths differ");
  int d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) d += (a[j] != b[j]) ? 1 : 0;
  return d;
}

int distinct_symbols(const Word& w) {
  std::set<int> symbols(w.begin(), w.end());
  return static_cast<int>(symbols.size());
}

}  // namespace oadiff
