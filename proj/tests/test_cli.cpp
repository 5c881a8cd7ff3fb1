#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "oadiff/cli.hpp"
#include "oadiff/designs.hpp"
#include "oadiff/io.hpp"
#include "test_util.hpp"

using namespace oadiff;
using testutil::arr;

namespace {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult result;
  result.exit_code = run_cli(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Per-process scratch directory for round-trip files.
std::string tmp_path(const std::string& name) {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "oadiff-cli-tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return (dir / name).string();
}

}  // namespace

TEST_CASE("search: plain value, JSON report and witness round-trip") {
  CliResult gamma = run({"search", "--gamma", "3", "2", "2"});
  CHECK(gamma.exit_code == 0);
  CHECK(gamma.out == "1/4\n");

  CliResult json = run({"search", "--gamma", "3", "2", "2", "--json"});
  CHECK(json.exit_code == 0);
  CHECK(contains(json.out, "\"schema\""));
  CHECK(contains(json.out, "\"value\": \"1/4\""));
  CHECK(contains(json.out, "\"target\": \"gamma\""));

  const std::string witness = tmp_path("rho332-witness.txt");
  CliResult rho = run({"search", "--rho", "3", "3", "2", "--witness", witness});
  CHECK(rho.exit_code == 0);
  CHECK(contains(rho.out, "1/9"));
  SymbolArray m = read_array_file(witness);
  CHECK(m.row_count() == 9);
  CHECK(is_orthogonal_array(m, 2));

  CliResult verified =
      run({"verify", "--oa", witness, "--strength", "2"});
  CHECK(verified.exit_code == 0);
  CHECK(contains(verified.out, "verified = true"));
  CHECK(contains(verified.out, "R = 9"));
}

TEST_CASE("arpa build, pad and verify round-trip") {
  const std::string pair_path = tmp_path("arpa62.txt");
  CliResult built = run({"arpa", "--build", "6", "2", "--out", pair_path});
  CHECK(built.exit_code == 0);
  CHECK(contains(built.out, "kind = arpa"));
  CHECK(contains(built.out, "R = 25"));
  CHECK(contains(built.out, "R* = 1"));

  CliResult verified = run({"verify", "--arpa", pair_path, "6", "2", "2"});
  CHECK(verified.exit_code == 0);
  CHECK(contains(verified.out, "verified = true"));
  CHECK(contains(verified.out, "R = 25"));

  // Strict pairs also satisfy the relaxed check.
  CliResult relaxed =
      run({"verify", "--relaxed-arpa", pair_path, "6", "2", "2"});
  CHECK(relaxed.exit_code == 0);

  // Padded build: three symbols extended to a (4,3)-pair of strength 2.
  CliResult padded = run({"arpa", "--build", "4", "2", "--pad", "3"});
  CHECK(padded.exit_code == 0);
  CHECK(contains(padded.out, "R = 4"));
  CHECK(contains(padded.out, "R* = 1"));
}

TEST_CASE("cpa build and verify round-trip") {
  const std::string pair_path = tmp_path("cpa52.txt");
  CliResult built = run({"cpa", "--build", "5", "2", "--out", pair_path});
  CHECK(built.exit_code == 0);
  CHECK(contains(built.out, "kind = bar-cpa"));
  CHECK(contains(built.out, "R = 16"));
  CHECK(contains(built.out, "R* = 1"));

  CHECK(run({"verify", "--cpa", pair_path, "5", "2", "2"}).exit_code == 0);
  CliResult verified = run({"verify", "--bar-cpa", pair_path, "5", "2", "2"});
  CHECK(verified.exit_code == 0);
  CHECK(contains(verified.out, "verified = true"));
}

TEST_CASE("verify failures exit 1") {
  const std::string bad_path = tmp_path("not-an-oa.txt");
  write_array_file(bad_path, arr(2, {"00", "01"}));
  CliResult result = run({"verify", "--oa", bad_path, "--strength", "2"});
  CHECK(result.exit_code == 1);
  CHECK(contains(result.out, "verified = false"));

  // A valid strength-1 scheme that is not a strength-2 scheme.
  const std::string ds_path = tmp_path("ds3.txt");
  write_array_file(ds_path, arr(3, {"00", "01", "02"}));
  CHECK(run({"verify", "--ds", ds_path, "--strength", "2"}).exit_code == 0);
  write_array_file(ds_path, arr(3, {"00", "01"}));
  CHECK(run({"verify", "--ds", ds_path, "--strength", "2"}).exit_code == 1);
}

TEST_CASE("gen, csp oracle and derandomization") {
  const std::string inst = tmp_path("i223.json");
  CliResult gen =
      run({"gen", "--family", "Iqkn", "--q", "2", "--k", "2", "--n", "3",
           "--out", inst});
  CHECK(gen.exit_code == 0);
  CHECK(contains(gen.out, "constraints = 15"));

  CliResult oracle = run({"csp", "--instance", inst, "--oracle", "--eval",
                          "0,0,0,0,0,0", "--derand"});
  CHECK(oracle.exit_code == 0);
  CHECK(contains(oracle.out, "opt = 15"));
  CHECK(contains(oracle.out, "wor = 6"));
  CHECK(contains(oracle.out, "mean = 15/2"));
  CHECK(contains(oracle.out, "avd = 1/6"));
  CHECK(contains(oracle.out, "value = 15"));
  CHECK(contains(oracle.out, "greedy-value = 15"));

  // Parallel enumeration returns the same report.
  CliResult jobs = run({"csp", "--instance", inst, "--oracle", "--jobs", "3"});
  CHECK(jobs.exit_code == 0);
  CHECK(contains(jobs.out, "opt = 15"));
  CHECK(contains(jobs.out, "argopt = 0,0,0,0,0,0"));

  // Without --out the instance goes to standard output and reads back.
  CliResult stream = run({"gen", "--family", "tildeI", "--n", "2"});
  CHECK(stream.exit_code == 0);
  std::istringstream in(stream.out);
  CspInstance tilde = read_instance(in);
  CHECK(tilde.n == 4);
  CHECK(tilde.constraints.size() == 4);
}

TEST_CASE("reduce pipeline") {
  const std::string inst = tmp_path("rnd325.json");
  CHECK(run({"gen", "--family", "random", "--q", "3", "--k", "2", "--n", "5",
             "--m", "6", "--seed", "17", "--out", inst})
            .exit_code == 0);

  CliResult reduced =
      run({"reduce", "--instance", inst, "--p", "2", "--oracle"});
  CHECK(reduced.exit_code == 0);
  CHECK(contains(reduced.out, "certified-ratio = 1/4"));
  CHECK(contains(reduced.out, "achieved-ratio"));
  CHECK(contains(reduced.out, "subinstances"));

  CliResult ls = run({"reduce", "--instance", inst, "--p", "2", "--base",
                      "ls"});
  CHECK(ls.exit_code == 0);

  CliResult bad_base =
      run({"reduce", "--instance", inst, "--p", "2", "--base", "greedy"});
  CHECK(bad_base.exit_code == 2);
}

TEST_CASE("ball and identity") {
  const std::string inst = tmp_path("j224.json");
  CHECK(run({"gen", "--family", "Jqkn", "--q", "2", "--k", "2", "--n", "4",
             "--out", inst})
            .exit_code == 0);

  CliResult ball = run({"ball", "--instance", inst, "--center", "1,1,1,1",
                        "--radius", "4", "--oracle"});
  CHECK(ball.exit_code == 0);
  CHECK(contains(ball.out, "best = 0,0,0,0"));
  CHECK(contains(ball.out, "value = 6"));
  CHECK(contains(ball.out, "achieved-ratio = 1"));
  CHECK(contains(ball.out, "diameter-spread = 1"));

  const std::string lin = tmp_path("e2lin2.json");
  CHECK(run({"gen", "--family", "e2lin2", "--n", "6", "--m", "9", "--seed",
             "3", "--out", lin})
            .exit_code == 0);
  CliResult holds = run({"identity", "--instance", lin, "--x", "0,0,0,0,0,0",
                         "--xstar", "1,1,1,1,1,1"});
  CHECK(holds.exit_code == 0);
  CHECK(contains(holds.out, "holds = true"));

  CliResult fails = run({"identity", "--instance", lin, "--x", "0,0,0,0,0,0",
                         "--xstar", "1,1,1,1,1,1", "--k", "1"});
  CHECK(fails.exit_code == 1);
  CHECK(contains(fails.out, "holds = false"));
}

TEST_CASE("usage errors exit 2 and runs are deterministic") {
  CHECK(run({"bogus"}).exit_code == 2);
  CHECK(run({"search"}).exit_code == 2);          // no target
  CHECK(run({"verify"}).exit_code == 2);          // nothing to verify
  CHECK(run({"gen", "--family", "nope"}).exit_code == 2);
  CHECK(run({"reduce", "--p", "2"}).exit_code == 2);  // missing instance
  CliResult missing =
      run({"csp", "--instance", tmp_path("does-not-exist.json")});
  CHECK(missing.exit_code == 1);

  CliResult first = run({"search", "--rhoE", "3", "3", "2"});
  CliResult second = run({"search", "--rhoE", "3", "3", "2"});
  CHECK(first.exit_code == 0);
  CHECK(first.out == "1/3\n");
  CHECK(first.out == second.out);

  CliResult help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(contains(help.out, "verify"));
}
