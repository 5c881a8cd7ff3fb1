// ---------------------------------------------------------------------------
// budget.hpp -- enumeration and model-size budgets.
//
// Desk-scale guards: full enumeration is limited to `enumeration_budget()`
// solutions and LP builders refuse word spaces above `lp_budget()`
// variables.  The environment variable OADIFF_BUDGET overrides both.
// ---------------------------------------------------------------------------
#pragma once

#include <cstdint>

namespace oadiff {

// Default 2^24; overridden by OADIFF_BUDGET when set.
std::uint64_t enumeration_budget();

// Default 2^20; overridden by OADIFF_BUDGET when it is larger.
std::uint64_t lp_budget();

}  // namespace oadiff
