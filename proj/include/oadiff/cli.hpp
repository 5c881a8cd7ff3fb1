// ---------------------------------------------------------------------------
// cli.hpp -- command-line front end (library entry point, testable).
//
// Verbs: verify | search | arpa | cpa | csp | reduce | ball | identity |
// gen | tables.  Exit codes: 0 success, 1 verification failure (witness
// printed), 2 usage error.
// ---------------------------------------------------------------------------
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oadiff {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace oadiff
