// ---------------------------------------------------------------------------
// budget.cpp -- enumeration / model-size budgets with env override.
// ---------------------------------------------------------------------------
#include "oadiff/budget.hpp"

#include <cstdlib>
#include <string>

namespace oadiff {

namespace {

std::uint64_t env_budget() {
  const char* raw = std::getenv("OADIFF_BUDGET");
  if (raw == nullptr) return 0;
  try {
    return std::stoull(raw);
  } catch (...) {
    return 0;
  }
}

}  // namespace

std::uint64_t enumeration_budget() {
  const std::uint64_t override_value = env_budget();
  return override_value != 0 ? override_value : (1ULL << 24);
}

std::uint64_t lp_budget() {
  const std::uint64_t override_value = env_budget();
  const std::uint64_t base = 1ULL << 20;
  return override_value > base ? override_value : base;
}

}  // namespace oadiff
