// Shared helpers for the test suites.
#pragma once

#include <string>
#include <vector>

#include "oadiff/csp.hpp"
#include "oadiff/errors.hpp"
#include "oadiff/rational.hpp"
#include "oadiff/symbol_array.hpp"

namespace testutil {

// Array literal: one string of digit symbols per row.
inline oadiff::SymbolArray arr(int q, const std::vector<std::string>& rows) {
  oadiff::SymbolArray m;
  m.q = q;
  m.nu = rows.empty() ? 1 : static_cast<int>(rows[0].size());
  for (const std::string& row : rows) {
    oadiff::Word w;
    for (char c : row) w.push_back(c - '0');
    m.rows.push_back(std::move(w));
  }
  return m;
}

inline oadiff::Word w(const std::string& digits) {
  oadiff::Word out;
  for (char c : digits) out.push_back(c - '0');
  return out;
}

inline oadiff::Rational r(long num, long den = 1) {
  return oadiff::rat(num, den);
}

// The error code thrown by fn, or "" if it does not throw.
template <typename Fn>
std::string thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const oadiff::Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace testutil
