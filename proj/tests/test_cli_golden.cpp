// Golden-file coverage for every CLI subcommand: byte-identical output for
// fixed arguments and seed, and the documented exit codes.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_against_golden(const std::string& args, const std::string& name,
                          int expect_exit) {
  RunResult r = run_cli(args);
  CHECK(r.exit_code == expect_exit);
  CHECK(r.output == golden(name));
  // Determinism: a second run is byte-identical.
  CHECK(run_cli(args).output == r.output);
}

}  // namespace

TEST_CASE("golden: sqrt nonexistence carries the failing condition") {
  check_against_golden("sqrt -p 3 -N 0 3/1", "sqrt_odd_valuation.json", 2);
}

TEST_CASE("golden: sqrt of -3 in Q_7") {
  check_against_golden("sqrt -p 7 -N 0 --precision 8 -- -3/1", "sqrt_minus3_q7.json", 0);
}

TEST_CASE("golden: fixed points of the degenerate Ising case") {
  check_against_golden("fixed-points -p 3 -q 1 -N 1 --precision 8",
                       "fixed_points_311.json", 0);
}

TEST_CASE("golden: classification at (5,5,3)") {
  check_against_golden("classify -p 5 -q 5 -N 3", "classify_553.json", 0);
}

TEST_CASE("golden: orbit from a point of norm 5") {
  check_against_golden("orbit -p 5 -q 5 -N 3 --start 1/5 --max-iter 40",
                       "orbit_553.json", 0);
}

TEST_CASE("golden: compatibility certificate for the uniform field") {
  check_against_golden("compat-check -p 3 -q 1 -N 1 --depth 2 --field fixed:0",
                       "compat_311.json", 0);
}

TEST_CASE("golden: measure norms cross-check at (3,1,-2)") {
  check_against_golden("measure-norms -p 3 -q 1 -N -2 --depth 2 --measure 1",
                       "measure_norms_31m2.json", 0);
}

TEST_CASE("golden: phase report for the strong transition") {
  check_against_golden("phase -p 5 -q 5 -N 3", "phase_553.json", 0);
}

TEST_CASE("golden: phase diagram CSV grid") {
  check_against_golden(
      "phase-diagram --p-list 3,5 --q-range 1:3 --n-range -2:2",
      "phase_diagram.csv", 0);
}

TEST_CASE("golden: self-test summary") {
  check_against_golden("self-test --seed 7", "self_test.txt", 0);
}

TEST_CASE("exit codes: usage errors and nonexistent objects") {
  CHECK(run_cli("sqrt").exit_code == 1);                      // missing arg
  CHECK(run_cli("nonsense").exit_code == 1);                  // unknown command
  CHECK(run_cli("sqrt -p 4 -N 0 2/1").exit_code == 1);        // 4 is not prime
  CHECK(run_cli("fixed-points -p 3 -q 1 -N 0").exit_code == 1);  // N = 0
  CHECK(run_cli("sqrt -p 3 -N 0 3/1").exit_code == 2);        // no root
  CHECK(run_cli("measure-norms -p 5 -q 1 -N 2 --depth 2 --measure 1").exit_code ==
        2);  // mu_1 undefined: no fixed point
}

TEST_CASE("PADIC_PRECISION environment override") {
  RunResult r = run_cli("--format text fixed-points -p 3 -q 1 -N 1");
  CHECK(r.output.find("params.precision = 64") != std::string::npos);
  setenv("PADIC_PRECISION", "32", 1);
  RunResult r32 = run_cli("--format text fixed-points -p 3 -q 1 -N 1");
  CHECK(r32.output.find("params.precision = 32") != std::string::npos);
  // An explicit flag wins over the environment.
  RunResult rf = run_cli("--format text --precision 16 fixed-points -p 3 -q 1 -N 1");
  CHECK(rf.output.find("params.precision = 16") != std::string::npos);
  unsetenv("PADIC_PRECISION");
}

TEST_CASE("field files drive the compatibility check") {
  // A uniform per-vertex field written by hand: every vertex of V_3 gets
  // h = (1, 1); it solves the recursion, so the certificate passes.
  std::string path = "/tmp/padic_potts_field_test.json";
  {
    std::ofstream out(path);
    out << "{";
    bool first = true;
    auto emit = [&](const std::string& v) {
      if (!first) out << ",";
      first = false;
      out << "\"" << v << "\":[{\"valuation\":0,\"digits\":[1]},"
          << "{\"valuation\":0,\"digits\":[1]}]";
    };
    for (const std::string v : {"1", "2"}) emit(v);
    for (const std::string v : {"1.1", "1.2", "2.1", "2.2"}) emit(v);
    for (const std::string a : {"1", "2"})
      for (const std::string b : {"1", "2"})
        for (const std::string c : {"1", "2"}) emit(a + "." + b + "." + c);
    out << "}";
  }
  RunResult r = run_cli("compat-check -p 3 -q 1 -N 1 --depth 3 --field file:" +
                        path + " --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("compatibility.pass = true") != std::string::npos);
  std::remove(path.c_str());
}
