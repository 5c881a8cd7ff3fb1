// ---------------------------------------------------------------------------
// io.hpp -- text formats for arrays, pairs and CSP instances.
//
// Array text format:   "q nu R" on the first line, then R rows of nu
//                      space-separated symbols.
// Pair text format:    "PAIR kind q nu R", then a "PSI" header with R rows,
//                      then a "PHI" header with R rows.
// Instance format:     JSON {"q", "n", "goal", "constraints": [{"vars"
//                      (1-based), "weight": "num/den", "table": [...]}]},
//                      tables in lexicographic order, first coordinate most
//                      significant.
// ---------------------------------------------------------------------------
#pragma once

#include <iosfwd>
#include <string>

#include "oadiff/arpa.hpp"
#include "oadiff/csp.hpp"
#include "oadiff/symbol_array.hpp"

namespace oadiff {

SymbolArray read_array(std::istream& in);
void write_array(std::ostream& out, const SymbolArray& m);
SymbolArray read_array_file(const std::string& path);
void write_array_file(const std::string& path, const SymbolArray& m);

ArrayPair read_pair(std::istream& in, std::string* kind_out = nullptr);
void write_pair(std::ostream& out, const ArrayPair& pair,
                const std::string& kind);
ArrayPair read_pair_file(const std::string& path,
                         std::string* kind_out = nullptr);
void write_pair_file(const std::string& path, const ArrayPair& pair,
                     const std::string& kind);

CspInstance read_instance(std::istream& in);
void write_instance(std::ostream& out, const CspInstance& instance);
CspInstance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const CspInstance& instance);

}  // namespace oadiff
