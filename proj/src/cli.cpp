// ---------------------------------------------------------------------------
// cli.cpp -- command-line front end.
//
// Verbs: verify, search, arpa, cpa, csp, reduce, ball, identity, gen,
// tables.  Every verb supports --json (schema 1).  Exit codes: 0 success,
// 1 verification / check failure (witness printed), 2 usage error.
// ---------------------------------------------------------------------------
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oadiff/arpa.hpp"
#include "oadiff/cli.hpp"
#include "oadiff/csp.hpp"
#include "oadiff/designs.hpp"
#include "oadiff/errors.hpp"
#include "oadiff/io.hpp"
#include "oadiff/lp.hpp"
#include "oadiff/neighborhood.hpp"
#include "oadiff/reduction.hpp"

namespace oadiff {

namespace {

// Ordered key/value report, printable as text lines or JSON.
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value) {
    fields.push_back({key, value});
  }
  void add(const std::string& key, const Rational& value) {
    add(key, rational_str(value));
  }
  void add(const std::string& key, long value) {
    add(key, std::to_string(value));
  }

  void print(std::ostream& out, bool json) const {
    if (json) {
      nlohmann::json doc;
      doc["schema"] = 1;
      for (const auto& [key, value] : fields) doc[key] = value;
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& [key, value] : fields) {
        out << key << " = " << value << "\n";
      }
    }
  }
};

std::string word_csv(const Word& w) {
  std::string s;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(w[j]);
  }
  return s;
}

Word parse_csv(const std::string& text) {
  Word w;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      w.push_back(std::stoi(cell));
    } catch (const std::exception&) {
      fail("BadArgs", "malformed coordinate list '" + text + "'");
    }
  }
  if (w.empty()) fail("BadArgs", "empty coordinate list");
  return w;
}

const char* kind_name(PairKind kind) {
  switch (kind) {
    case PairKind::arpa:
      return "arpa";
    case PairKind::relaxed_arpa:
      return "relaxed-arpa";
    case PairKind::cpa:
      return "cpa";
    case PairKind::bar_cpa:
      return "bar-cpa";
  }
  return "?";
}

void report_certificate(Report& report, const PairCertificate& cert) {
  report.add("kind", kind_name(cert.kind));
  report.add("R", cert.R);
  report.add("R*", cert.R_star);
}

// ------------------------------------------------------------------- verify
int cmd_verify(const std::vector<std::string>& oa,
               const std::vector<std::string>& ds, int strength,
               const std::vector<std::string>& arpa,
               const std::vector<std::string>& relaxed,
               const std::vector<std::string>& cpa,
               const std::vector<std::string>& bar_cpa, bool json,
               std::ostream& out) {
  Report report;
  auto pair_args = [&](const std::vector<std::string>& spec, int& a, int& b,
                       int& k) {
    a = std::stoi(spec[1]);
    b = std::stoi(spec[2]);
    k = std::stoi(spec[3]);
    return read_pair_file(spec[0]);
  };

  if (!oa.empty()) {
    SymbolArray m = read_array_file(oa[0]);
    if (!is_orthogonal_array(m, strength)) {
      report.add("verified", "false");
      report.print(out, json);
      return 1;
    }
    report.add("verified", "true");
    report.add("R", static_cast<long>(m.row_count()));
  } else if (!ds.empty()) {
    SymbolArray m = read_array_file(ds[0]);
    if (!is_difference_scheme(m, strength)) {
      report.add("verified", "false");
      report.print(out, json);
      return 1;
    }
    report.add("verified", "true");
    report.add("R", static_cast<long>(m.row_count()));
  } else if (!arpa.empty()) {
    int q, p, k;
    ArrayPair pair = pair_args(arpa, q, p, k);
    report_certificate(report, verify_arpa(pair, q, p, k));
    report.add("verified", "true");
  } else if (!relaxed.empty()) {
    int q, p, k;
    ArrayPair pair = pair_args(relaxed, q, p, k);
    report_certificate(report, verify_relaxed_arpa(pair, q, p, k));
    report.add("verified", "true");
  } else if (!cpa.empty()) {
    int n, d, k;
    ArrayPair pair = pair_args(cpa, n, d, k);
    report_certificate(report, verify_cpa(pair, n, d, k));
    report.add("verified", "true");
  } else if (!bar_cpa.empty()) {
    int n, d, k;
    ArrayPair pair = pair_args(bar_cpa, n, d, k);
    report_certificate(report, verify_bar_cpa(pair, n, d, k));
    report.add("verified", "true");
  } else {
    fail("BadArgs", "nothing to verify: pass --oa, --ds, --arpa, "
                    "--relaxed-arpa, --cpa or --bar-cpa");
  }
  report.print(out, json);
  return 0;
}

// ------------------------------------------------------------------- search
int cmd_search(const std::string& what, const std::vector<int>& args,
               const std::string& witness_path, bool json, std::ostream& out) {
  LpModel model;
  if (what == "rho") {
    model = model_rho(args[0], args[1], args[2]);
  } else if (what == "rhoE") {
    model = model_rho_E(args[0], args[1], args[2]);
  } else if (what == "F") {
    model = model_F(args[0], args[1], args[2]);
  } else if (what == "E") {
    model = model_E(args[0], args[1], args[2]);
  } else if (what == "Rmin") {
    LpSolution rho = solve_model(model_rho(args[0], args[1], args[2]));
    if (rho.status != LpStatus::optimal) fail("Internal", "rho LP not solved");
    model = model_R_min(args[0], args[1], args[2], rho.value);
  } else if (what == "Rstar") {
    LpSolution f = solve_model(model_F(args[0], args[1], args[2]));
    if (f.status != LpStatus::optimal) fail("Internal", "F ILP not solved");
    model = model_R_star(args[0], args[1], args[2],
                         static_cast<long>(f.value.get_num().get_si()));
  } else if (what == "gamma") {
    model = model_gamma(args[0], args[1], args[2]);
  } else if (what == "gammaE") {
    model = model_gamma_E(args[0], args[1], args[2]);
  } else if (what == "delta") {
    model = model_delta(args[0], args[1], args[2]);
  } else if (what == "bardelta") {
    model = model_bar_delta(args[0], args[1], args[2]);
  } else {
    fail("BadArgs", "unknown search target");
  }

  LpSolution solution = solve_model(model);
  if (solution.status != LpStatus::optimal) {
    fail("Infeasible", "the model has no optimal solution");
  }

  if (json || !witness_path.empty()) {
    Report report;
    report.add("target", what);
    report.add("value", solution.value);
    if (!witness_path.empty()) {
      Witness witness =
          extract_witness(model, solution, common_scale(model, solution));
      if (witness.is_pair) {
        write_pair_file(witness_path, witness.pair, "pair");
      } else {
        write_array_file(witness_path, witness.array);
      }
      report.add("witness", witness_path);
    }
    if (json) {
      report.print(out, true);
      return 0;
    }
  }
  out << rational_str(solution.value) << "\n";
  return 0;
}

// --------------------------------------------------------------- arpa / cpa
int cmd_build_pair(bool boolean, int a, int k, int pad_p,
                   const std::string& out_path, bool json, std::ostream& out) {
  ArrayPair pair;
  PairCertificate cert;
  std::string kind;
  if (boolean) {
    std::tie(pair, cert) = build_cpa(a, k);
    kind = "bar-cpa";
  } else if (pad_p > 0) {
    pair = pad_arpa(build_arpa(a - pad_p + k, k).first, a, pad_p, k);
    cert = verify_arpa(pair, a, pad_p, k);
    kind = "arpa";
  } else {
    std::tie(pair, cert) = build_arpa(a, k);
    kind = "arpa";
  }
  Report report;
  report_certificate(report, cert);
  if (!out_path.empty()) {
    write_pair_file(out_path, pair, kind);
    report.add("out", out_path);
  }
  report.print(out, json);
  return 0;
}

// ---------------------------------------------------------------------- csp
int cmd_csp(const std::string& instance_path, bool oracle,
            const std::string& eval_csv, bool derand, int jobs, bool json,
            std::ostream& out) {
  CspInstance instance = read_instance_file(instance_path);
  Report report;
  report.add("q", static_cast<long>(instance.q));
  report.add("n", static_cast<long>(instance.n));
  report.add("goal", instance.goal == Goal::max ? "max" : "min");
  if (!eval_csv.empty()) {
    Word x = parse_csv(eval_csv);
    report.add("value", evaluate(instance, x));
  }
  if (derand) {
    Word x = conditional_expectation(instance);
    report.add("greedy-solution", word_csv(x));
    report.add("greedy-value", evaluate(instance, x));
  }
  if (oracle) {
    OracleReport r = brute_force(instance, jobs);
    report.add("opt", r.opt);
    report.add("wor", r.wor);
    report.add("mean", r.mean);
    report.add("argopt", word_csv(r.argopt));
    report.add("argwor", word_csv(r.argwor));
    report.add("avd", r.avd_defined ? rational_str(r.avd) : "undefined");
  }
  report.print(out, json);
  return 0;
}

// ------------------------------------------------------------------- reduce
int cmd_reduce(const std::string& instance_path, int p,
               const std::string& pair_path, const std::string& base,
               bool oracle, bool json, std::ostream& out) {
  CspInstance instance = read_instance_file(instance_path);
  ArrayPair pair;
  bool have_pair = false;
  if (!pair_path.empty()) {
    pair = read_pair_file(pair_path);
    have_pair = true;
  }
  BaseSolver solver;
  if (base == "brute") {
    solver = BaseSolver::brute;
  } else if (base == "ls") {
    solver = BaseSolver::local_search;
  } else {
    fail("BadArgs", "--base must be brute or ls");
  }
  ReductionOutcome outcome =
      reduce_and_solve(instance, p, have_pair ? &pair : nullptr, solver);
  Report report;
  report.add("value", outcome.best_value);
  report.add("solution", word_csv(outcome.best_solution));
  report.add("certified-ratio", outcome.certified_ratio);
  report.add("subinstances", outcome.subinstances_solved);
  if (oracle) {
    OracleReport r = brute_force(instance);
    auto ratio = differential_ratio(r, outcome.best_value);
    report.add("achieved-ratio",
               ratio ? rational_str(*ratio) : std::string("undefined"));
  }
  report.print(out, json);
  return 0;
}

// --------------------------------------------------------------------- ball
int cmd_ball(const std::string& instance_path, const std::string& center_csv,
             int radius, bool shifted, bool oracle, bool json,
             std::ostream& out) {
  CspInstance instance = read_instance_file(instance_path);
  BallSpec spec;
  spec.center = parse_csv(center_csv);
  spec.radius = radius;
  spec.shifted =
      shifted ? ShiftMode::all_uniform_shifts : ShiftMode::none;
  auto [best, value] = best_in_ball(instance, spec);
  Report report;
  report.add("best", word_csv(best));
  report.add("value", value);
  if (oracle) {
    OracleReport r = brute_force(instance);
    auto ratio = differential_ratio(r, value);
    report.add("achieved-ratio",
               ratio ? rational_str(*ratio) : std::string("undefined"));
    if (r.opt != r.wor) {
      report.add("diameter-spread", ball_diameter_spread(instance, spec));
    }
  }
  report.print(out, json);
  return 0;
}

// ----------------------------------------------------------------- identity
int cmd_identity(const std::string& instance_path, const std::string& x_csv,
                 const std::string& xstar_csv, int k, bool json,
                 std::ostream& out) {
  CspInstance instance = read_instance_file(instance_path);
  Word x = parse_csv(x_csv);
  Word x_star = parse_csv(xstar_csv);
  if (k <= 0) k = std::max(1, instance.max_arity());
  const bool holds = identity_check(instance, x_star, x, k);
  Report report;
  report.add("k", static_cast<long>(k));
  report.add("holds", holds ? "true" : "false");
  report.print(out, json);
  return holds ? 0 : 1;
}

// ---------------------------------------------------------------------- gen
int cmd_gen(const std::string& family, int q, int k, int n, int m,
            std::uint64_t seed, bool rational_tables,
            const std::string& out_path, bool json, std::ostream& out) {
  CspInstance instance;
  if (family == "Iqkn") {
    instance = gen_I_qkn(q, k, n);
  } else if (family == "tildeI") {
    instance = gen_tilde_I(n);
  } else if (family == "Jqkn") {
    instance = gen_J_qkn(q, k, n);
  } else if (family == "random") {
    instance = gen_random(q, k, n, m, seed, rational_tables);
  } else if (family == "e2lin2") {
    instance = gen_e2lin2(n, m, seed);
  } else {
    fail("BadArgs", "unknown family '" + family + "'");
  }
  if (out_path.empty()) {
    write_instance(out, instance);
    return 0;
  }
  write_instance_file(out_path, instance);
  Report report;
  report.add("family", family);
  report.add("constraints", static_cast<long>(instance.constraints.size()));
  report.add("out", out_path);
  report.print(out, json);
  return 0;
}

// ------------------------------------------------------------------- tables
int cmd_tables(bool json, std::ostream& out) {
  struct Entry {
    std::string name;
    std::function<Rational()> compute;
    std::string expected;
  };
  const std::vector<Entry> entries = {
      {"rho(3,2,2)", [] { return solve_model(model_rho(3, 2, 2)).value; },
       "1/4"},
      {"rho(4,2,2)", [] { return solve_model(model_rho(4, 2, 2)).value; },
       "1/6"},
      {"rho(3,3,2)", [] { return solve_model(model_rho(3, 3, 2)).value; },
       "1/9"},
      {"rho(4,3,2)", [] { return solve_model(model_rho(4, 3, 2)).value; },
       "1/9"},
      {"rhoE(3,3,2)", [] { return solve_model(model_rho_E(3, 3, 2)).value; },
       "1/3"},
      {"rhoE(4,3,2)", [] { return solve_model(model_rho_E(4, 3, 2)).value; },
       "1/5"},
      {"gamma(3,2,2)", [] { return solve_model(model_gamma(3, 2, 2)).value; },
       "1/4"},
      {"gamma(4,2,2)", [] { return solve_model(model_gamma(4, 2, 2)).value; },
       "1/9"},
      {"gamma(4,3,2)", [] { return solve_model(model_gamma(4, 3, 2)).value; },
       "1/3"},
      {"gammaE(3,2,2)",
       [] { return solve_model(model_gamma_E(3, 2, 2)).value; }, "1/3"},
      {"gammaE(4,2,2)",
       [] { return solve_model(model_gamma_E(4, 2, 2)).value; }, "1/4"},
      {"gammaE(4,3,2)",
       [] { return solve_model(model_gamma_E(4, 3, 2)).value; }, "1/2"},
  };
  Report report;
  bool all_ok = true;
  for (const Entry& entry : entries) {
    const std::string got = rational_str(entry.compute());
    if (got == entry.expected) {
      report.add(entry.name, got);
    } else {
      report.add(entry.name,
                 got + " (expected " + entry.expected + ") MISMATCH");
      all_ok = false;
    }
  }
  report.add("status", all_ok ? "ok" : "mismatch");
  report.print(out, json);
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact toolkit for designs, reduction pairs and CSP bounds"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a JSON report (schema 1)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a design or pair file");
  std::vector<std::string> v_oa, v_ds, v_arpa, v_relaxed, v_cpa, v_bar;
  int v_strength = 2;
  verify->add_option("--oa", v_oa, "orthogonal array file")->expected(1);
  verify->add_option("--ds", v_ds, "difference scheme file")->expected(1);
  verify->add_option("--strength", v_strength, "strength t for --oa/--ds");
  verify->add_option("--arpa", v_arpa, "FILE Q P K")->expected(4);
  verify->add_option("--relaxed-arpa", v_relaxed, "FILE Q P K")->expected(4);
  verify->add_option("--cpa", v_cpa, "FILE N D K")->expected(4);
  verify->add_option("--bar-cpa", v_bar, "FILE N D K")->expected(4);

  // search
  auto* search = app.add_subcommand("search", "solve a design-number model");
  std::map<std::string, std::vector<int>> s_args;
  for (const char* name : {"rho", "rhoE", "F", "E", "Rmin", "Rstar"}) {
    search->add_option("--" + std::string(name), s_args[name], "NU Q T")
        ->expected(3);
  }
  for (const char* name : {"gamma", "gammaE"}) {
    search->add_option("--" + std::string(name), s_args[name], "Q P K")
        ->expected(3);
  }
  for (const char* name : {"delta", "bardelta"}) {
    search->add_option("--" + std::string(name), s_args[name], "N D K")
        ->expected(3);
  }
  std::string s_witness;
  search->add_option("--witness", s_witness, "write the extracted witness");

  // arpa / cpa
  auto* arpa = app.add_subcommand("arpa", "build an alphabet-reduction pair");
  std::vector<int> a_build;
  int a_pad = 0;
  std::string a_out;
  arpa->add_option("--build", a_build, "Q K")->expected(2)->required();
  arpa->add_option("--pad", a_pad, "pad to symbol budget P");
  arpa->add_option("--out", a_out, "output pair file");

  auto* cpa = app.add_subcommand("cpa", "build a cover pair");
  std::vector<int> c_build;
  std::string c_out;
  cpa->add_option("--build", c_build, "N K")->expected(2)->required();
  cpa->add_option("--out", c_out, "output pair file");

  // csp
  auto* csp = app.add_subcommand("csp", "evaluate / solve an instance");
  std::string csp_instance, csp_eval;
  bool csp_oracle = false, csp_derand = false;
  int csp_jobs = 1;
  csp->add_option("--instance", csp_instance, "instance JSON")->required();
  csp->add_flag("--oracle", csp_oracle, "brute-force opt/wor/mean/avd");
  csp->add_option("--eval", csp_eval, "evaluate at CSV solution");
  csp->add_flag("--derand", csp_derand, "conditional-expectation solution");
  csp->add_option("--jobs", csp_jobs, "worker threads for enumeration");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "alphabet-reduction pipeline");
  std::string r_instance, r_pair, r_base = "brute";
  int r_p = 0;
  bool r_oracle = false;
  reduce->add_option("--instance", r_instance, "instance JSON")->required();
  reduce->add_option("--p", r_p, "target alphabet size")->required();
  reduce->add_option("--pair", r_pair, "pair file (default: constructed)");
  reduce->add_option("--base", r_base, "base solver: brute | ls");
  reduce->add_flag("--oracle", r_oracle, "report the achieved ratio");

  // ball
  auto* ball = app.add_subcommand("ball", "exact optimum over a Hamming ball");
  std::string b_instance, b_center;
  int b_radius = 0;
  bool b_shifted = false, b_oracle = false;
  ball->add_option("--instance", b_instance, "instance JSON")->required();
  ball->add_option("--center", b_center, "CSV center")->required();
  ball->add_option("--radius", b_radius, "ball radius")->required();
  ball->add_flag("--shifted", b_shifted, "close under uniform shifts");
  ball->add_flag("--oracle", b_oracle, "report ratio and spread");

  // identity
  auto* identity = app.add_subcommand("identity", "alternating-sum identity");
  std::string i_instance, i_x, i_xstar;
  int i_k = 0;
  identity->add_option("--instance", i_instance, "instance JSON")->required();
  identity->add_option("--x", i_x, "CSV reference solution")->required();
  identity->add_option("--xstar", i_xstar, "CSV distant solution")->required();
  identity->add_option("--k", i_k, "identity order (default: max arity)");

  // gen
  auto* gen = app.add_subcommand("gen", "emit a named instance family");
  std::string g_family, g_out;
  int g_q = 2, g_k = 2, g_n = 2, g_m = 1;
  std::uint64_t g_seed = 1;
  bool g_rational = false;
  gen->add_option("--family", g_family,
                  "Iqkn | tildeI | Jqkn | random | e2lin2")
      ->required();
  gen->add_option("--q", g_q, "alphabet size");
  gen->add_option("--k", g_k, "arity");
  gen->add_option("--n", g_n, "variable parameter");
  gen->add_option("--m", g_m, "constraint count");
  gen->add_option("--seed", g_seed, "RNG seed");
  gen->add_flag("--rational", g_rational, "rational-valued tables");
  gen->add_option("--out", g_out, "output file (default: stdout)");

  // tables
  auto* tables =
      app.add_subcommand("tables", "recompute the small design-number tables");

  // Global options such as --json may appear after the verb.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help() << "\n";
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(v_oa, v_ds, v_strength, v_arpa, v_relaxed, v_cpa,
                        v_bar, json, out);
    }
    if (search->parsed()) {
      std::string what;
      for (const auto& [name, values] : s_args) {
        if (!values.empty()) {
          if (!what.empty()) fail("BadArgs", "choose a single search target");
          what = name;
        }
      }
      if (what.empty()) fail("BadArgs", "choose a search target");
      return cmd_search(what, s_args[what], s_witness, json, out);
    }
    if (arpa->parsed()) {
      return cmd_build_pair(false, a_build[0], a_build[1], a_pad, a_out, json,
                            out);
    }
    if (cpa->parsed()) {
      return cmd_build_pair(true, c_build[0], c_build[1], 0, c_out, json, out);
    }
    if (csp->parsed()) {
      return cmd_csp(csp_instance, csp_oracle, csp_eval, csp_derand, csp_jobs,
                     json, out);
    }
    if (reduce->parsed()) {
      return cmd_reduce(r_instance, r_p, r_pair, r_base, r_oracle, json, out);
    }
    if (ball->parsed()) {
      return cmd_ball(b_instance, b_center, b_radius, b_shifted, b_oracle,
                      json, out);
    }
    if (identity->parsed()) {
      return cmd_identity(i_instance, i_x, i_xstar, i_k, json, out);
    }
    if (gen->parsed()) {
      return cmd_gen(g_family, g_q, g_k, g_n, g_m, g_seed, g_rational, g_out,
                     json, out);
    }
    if (tables->parsed()) {
      return cmd_tables(json, out);
    }
  } catch (const Error& e) {
    if (e.code() == "BadArgs") {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no verb given\n";
  return 2;
}

}  // namespace oadiff
