// ---------------------------------------------------------------------------
// io.cpp -- array / pair / instance (de)serialization.
// ---------------------------------------------------------------------------
#include "oadiff/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oadiff/errors.hpp"

namespace oadiff {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("IoError", "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("IoError", "cannot open '" + path + "' for writing");
  return out;
}

std::vector<Word> read_rows(std::istream& in, int nu, long R,
                            const char* what) {
  std::vector<Word> rows;
  rows.reserve(R);
  for (long r = 0; r < R; ++r) {
    Word row(nu);
    for (int j = 0; j < nu; ++j) {
      if (!(in >> row[j])) {
        fail("IoError", std::string("truncated ") + what + " row data");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SymbolArray read_array(std::istream& in) {
  SymbolArray m;
  long R = 0;
  if (!(in >> m.q >> m.nu >> R) || R < 0) {
    fail("IoError", "array header must be 'q nu R'");
  }
  m.rows = read_rows(in, m.nu, R, "array");
  check_array(m);
  return m;
}

void write_array(std::ostream& out, const SymbolArray& m) {
  out << m.q << " " << m.nu << " " << m.row_count() << "\n";
  for (const Word& row : m.rows) {
    for (int j = 0; j < m.nu; ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
}

SymbolArray read_array_file(const std::string& path) {
  auto in = open_in(path);
  return read_array(in);
}

void write_array_file(const std::string& path, const SymbolArray& m) {
  auto out = open_out(path);
  write_array(out, m);
}

ArrayPair read_pair(std::istream& in, std::string* kind_out) {
  std::string tag, kind;
  int q = 0, nu = 0;
  long R = 0;
  if (!(in >> tag >> kind >> q >> nu >> R) || tag != "PAIR" || R < 0) {
    fail("IoError", "pair header must be 'PAIR kind q nu R'");
  }
  std::string header;
  if (!(in >> header) || header != "PSI") {
    fail("IoError", "expected the PSI section");
  }
  ArrayPair pair;
  pair.psi.q = pair.phi.q = q;
  pair.psi.nu = pair.phi.nu = nu;
  pair.psi.rows = read_rows(in, nu, R, "PSI");
  if (!(in >> header) || header != "PHI") {
    fail("IoError", "expected the PHI section");
  }
  pair.phi.rows = read_rows(in, nu, R, "PHI");
  check_array(pair.psi);
  check_array(pair.phi);
  if (kind_out != nullptr) *kind_out = kind;
  return pair;
}

void write_pair(std::ostream& out, const ArrayPair& pair,
                const std::string& kind) {
  out << "PAIR " << kind << " " << pair.psi.q << " " << pair.psi.nu << " "
      << pair.psi.row_count() << "\n";
  out << "PSI\n";
  for (const Word& row : pair.psi.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  out << "PHI\n";
  for (const Word& row : pair.phi.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
}

ArrayPair read_pair_file(const std::string& path, std::string* kind_out) {
  auto in = open_in(path);
  return read_pair(in, kind_out);
}

void write_pair_file(const std::string& path, const ArrayPair& pair,
                     const std::string& kind) {
  auto out = open_out(path);
  write_pair(out, pair, kind);
}

CspInstance read_instance(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail("IoError", std::string("malformed instance JSON: ") + e.what());
  }
  CspInstance instance;
  try {
    instance.q = doc.at("q").get<int>();
    instance.n = doc.at("n").get<int>();
    const std::string goal = doc.at("goal").get<std::string>();
    if (goal == "max") {
      instance.goal = Goal::max;
    } else if (goal == "min") {
      instance.goal = Goal::min;
    } else {
      fail("IoError", "goal must be 'max' or 'min'");
    }
    for (const auto& entry : doc.at("constraints")) {
      Constraint c;
      for (int v : entry.at("vars").get<std::vector<int>>()) {
        c.support.push_back(v - 1);  // the file format is 1-based
      }
      c.weight = parse_rational(entry.at("weight").get<std::string>());
      c.table.q = instance.q;
      c.table.arity = static_cast<int>(c.support.size());
      for (const auto& cell : entry.at("table")) {
        c.table.values.push_back(parse_rational(cell.get<std::string>()));
      }
      instance.constraints.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    fail("IoError", std::string("malformed instance JSON: ") + e.what());
  }
  check_instance(instance);
  return instance;
}

void write_instance(std::ostream& out, const CspInstance& instance) {
  nlohmann::json doc;
  doc["q"] = instance.q;
  doc["n"] = instance.n;
  doc["goal"] = instance.goal == Goal::max ? "max" : "min";
  doc["constraints"] = nlohmann::json::array();
  for (const Constraint& c : instance.constraints) {
    nlohmann::json entry;
    std::vector<int> vars;
    for (int v : c.support) vars.push_back(v + 1);
    entry["vars"] = vars;
    entry["weight"] = rational_str(c.weight);
    std::vector<std::string> table;
    for (const Rational& value : c.table.values) {
      table.push_back(rational_str(value));
    }
    entry["table"] = table;
    doc["constraints"].push_back(std::move(entry));
  }
  out << doc.dump(2) << "\n";
}

CspInstance read_instance_file(const std::string& path) {
  auto in = open_in(path);
  return read_instance(in);
}

void write_instance_file(const std::string& path,
                         const CspInstance& instance) {
  auto out = open_out(path);
  write_instance(out, instance);
}

}  // namespace oadiff
