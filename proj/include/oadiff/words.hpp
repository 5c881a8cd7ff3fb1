// ---------------------------------------------------------------------------
// words.hpp -- small combinatorial utilities over words and index sets.
//
// A Word is a fixed-length vector of symbols from {0, ..., q-1}.  Words are
// ordered lexicographically with the FIRST coordinate most significant; the
// dense table indexing used by the CSP module and the odometer enumeration
// here agree with that order.
// ---------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace oadiff {

using Word = std::vector<int>;

// Number of length-`len` words over an alphabet of size q, as a 64-bit count.
// Throws Error("Budget") if the count would exceed `limit` (0 = unchecked).
std::uint64_t word_space_size(int q, int len, std::uint64_t limit = 0);

// Dense index of a word: first coordinate most significant.
std::uint64_t word_index(const Word& w, int q);
Word word_at(std::uint64_t index, int q, int len);

// Odometer step in lexicographic order; returns false after the last word.
bool next_word(Word& w, int q);

// Enumerate all strictly increasing index sequences of length t drawn from
// {0, ..., n-1}, in lexicographic order.
void for_each_combination(int n, int t,
                          const std::function<void(const std::vector<int>&)>& fn);

// All subsets of {0, ..., n-1} of the given size, in lexicographic order
// (each subset reported as a sorted vector).
std::vector<std::vector<int>> subsets_of_size(int n, int size);

// Coordinatewise sum (w + shift * all-ones) mod q.
Word shift_word(const Word& w, int shift, int q);

// Hamming distance (words must have equal length).
int hamming_distance(const Word& a, const Word& b);

// Number of distinct symbols appearing in the word.
int distinct_symbols(const Word& w);

}  // namespace oadiff
