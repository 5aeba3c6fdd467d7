// End-to-end tests for the command-line tool, run as a subprocess: exit-code
// contract (0 success / 1 verification failure / 2 usage error), byte-identical
// re-runs, half-integer m enforcement, OUTPUT_DIR resolution, and sanity of
// the emitted tables (spectrum levels, node counts, flat-limit rows).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "h3landau/output.hpp"

using h3landau::OutputRecord;
using h3landau::parse_csv;
using h3landau::parse_json;
using h3landau::to_csv;
using h3landau::to_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with the given arguments through /bin/sh, capturing stdout
// (and stderr too when combine_stderr is set).
RunResult run_cli(const std::string& args, bool combine_stderr = false,
                  const std::string& env_prefix = "") {
  std::string cmd = env_prefix + "\"" + H3LANDAU_CLI_PATH + "\" " + args +
                    (combine_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool records_equal(const OutputRecord& a, const OutputRecord& b) {
  return a.schema_version == b.schema_version && a.command == b.command &&
         a.parameters == b.parameters && a.columns == b.columns && a.rows == b.rows;
}

std::string make_temp_dir() {
  char tmpl[] = "/tmp/h3landau_cli_XXXXXX";
  char* dir = mkdtemp(tmpl);
  REQUIRE(dir != nullptr);
  return std::string(dir);
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);                    // missing subcommand
  CHECK(run_cli("bogus").exit_code == 2);               // unknown subcommand
  CHECK(run_cli("spectrum --m 1/2").exit_code == 2);    // missing required --B
  CHECK(run_cli("spectrum --B 5 --m 1/2 --format xml").exit_code == 2);
}

TEST_CASE("integer m is rejected with a half-integer message") {
  RunResult res = run_cli("spectrum --B 5 --m 1", true);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("error: inadmissible m: m must be a half-integer, got 2/2") !=
        std::string::npos);
  // Decimal form that is neither integer nor half-integer.
  CHECK(run_cli("spectrum --B 5 --m 0.3").exit_code == 2);
}

TEST_CASE("spectrum table: levels, margins, and both channels at m=1/2") {
  RunResult res = run_cli("spectrum --B 5 --m 1/2");
  REQUIRE(res.exit_code == 0);
  OutputRecord rec = parse_csv(res.output);
  CHECK(rec.command == "spectrum");
  CHECK(rec.columns ==
        std::vector<std::string>{"variant", "m", "n", "lambda_sq", "constraint_margin"});
  REQUIRE(rec.rows.size() == 8);  // four levels, two radial channels each
  std::vector<double> v3_levels, v3_margins, v4_levels;
  for (const auto& row : rec.rows) {
    CHECK(row[1] == 0.5);
    if (row[0] == 3.0) {
      v3_levels.push_back(row[3]);
      v3_margins.push_back(row[4]);
    } else {
      CHECK(row[0] == 4.0);
      v4_levels.push_back(row[3]);
    }
  }
  CHECK(v3_levels == std::vector<double>{9.0, 16.0, 21.0, 24.0});
  CHECK(v3_margins == std::vector<double>{4.0, 3.0, 2.0, 1.0});
  // At m = 1/2 the two channels coincide level by level.
  CHECK(v4_levels == v3_levels);
}

TEST_CASE("spectrum below the confinement threshold is an empty table, not an error") {
  RunResult res = run_cli("spectrum --B 0.4 --m 1/2");
  CHECK(res.exit_code == 0);
  OutputRecord rec = parse_csv(res.output);
  CHECK(rec.rows.empty());
  CHECK(rec.columns.size() == 5);
}

TEST_CASE("re-runs are byte-identical") {
  std::string a = run_cli("spectrum --B 5 --m 1/2,3/2 --format json").output;
  std::string b = run_cli("spectrum --B 5 --m 1/2,3/2 --format json").output;
  REQUIRE(!a.empty());
  CHECK(a == b);
  std::string v1 = run_cli("verify --suite geometry").output;
  std::string v2 = run_cli("verify --suite geometry").output;
  REQUIRE(!v1.empty());
  CHECK(v1 == v2);
}

TEST_CASE("CSV and JSON emissions describe the same record") {
  RunResult csv = run_cli("spectrum --B 5 --m 1/2");
  RunResult json = run_cli("spectrum --B 5 --m 1/2 --format json");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(json.exit_code == 0);
  CHECK(records_equal(parse_csv(csv.output), parse_json(json.output)));
}

TEST_CASE("emitted CSV survives a CSV -> JSON -> CSV round-trip byte-for-byte") {
  std::string csv = run_cli("spectrum --B 5 --m 1/2,3/2").output;
  OutputRecord rec = parse_csv(csv);
  OutputRecord via_json = parse_json(to_json(rec));
  CHECK(to_csv(via_json) == csv);
}

TEST_CASE("verify: pass and fail exit codes with a worst-offender report") {
  RunResult pass = run_cli("verify --suite geometry");
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("verify: PASS") != std::string::npos);

  // No finite-difference check can reach 1e-20; the report must name the
  // worst offender and exit 1.
  RunResult fail = run_cli("verify --suite geometry --tol 1e-20");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("verify: FAIL") != std::string::npos);
  CHECK(fail.output.find("worst offender") != std::string::npos);
}

TEST_CASE("verify shooting prints formula and oracle levels side by side") {
  RunResult res = run_cli("verify --suite shooting --B 5 --m 1/2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("n,lambda_sq_formula,lambda_sq_shooting,rel_error") !=
        std::string::npos);
  CHECK(res.output.find("levels(formula)=4 levels(shooting)=4") != std::string::npos);
  CHECK(res.output.find("\n1,9,9.000000") != std::string::npos);
  CHECK(res.output.find("\n4,24,24.000000") != std::string::npos);
}

TEST_CASE("OUTPUT_DIR resolves relative output paths only") {
  std::string dir = make_temp_dir();
  std::string env = "OUTPUT_DIR=\"" + dir + "\" ";

  RunResult rel = run_cli("spectrum --B 5 --m 1/2 --out spec.csv", false, env);
  CHECK(rel.exit_code == 0);
  std::string rel_content = read_file(dir + "/spec.csv");

  RunResult abs = run_cli("spectrum --B 5 --m 1/2 --out \"" + dir + "/abs.csv\"", false, env);
  CHECK(abs.exit_code == 0);
  std::string abs_content = read_file(dir + "/abs.csv");

  std::string stdout_content = run_cli("spectrum --B 5 --m 1/2").output;
  CHECK(rel_content == stdout_content);
  CHECK(abs_content == stdout_content);

  std::remove((dir + "/spec.csv").c_str());
  std::remove((dir + "/abs.csv").c_str());
  std::remove(dir.c_str());
}

TEST_CASE("wavefunction radial sample: n sign changes and a decayed tail") {
  RunResult res = run_cli("wavefunction --B 5 --m 1/2 --n 3 --table radial");
  REQUIRE(res.exit_code == 0);
  OutputRecord rec = parse_csv(res.output);
  CHECK(rec.columns == std::vector<std::string>{"r", "R1", "R2"});
  REQUIRE(rec.rows.size() == 161);
  std::vector<double> r1;
  for (const auto& row : rec.rows) r1.push_back(row[1]);
  int flips = 0;
  double peak = 0.0;
  for (size_t i = 0; i + 1 < r1.size(); ++i) {
    if (r1[i] * r1[i + 1] < 0.0) ++flips;
    peak = std::max(peak, std::fabs(r1[i]));
  }
  // The level-n eigenfunction changes sign n times on (0, 8].
  CHECK(flips == 3);
  CHECK(std::fabs(r1.back()) < 1e-3 * peak);
}

TEST_CASE("wavefunction axial sample: hard decay on the left, bounded on the right") {
  RunResult res = run_cli(
      "wavefunction --B 5 --m 1/2 --n 1 --table axial --axial-variant 1 --branch + "
      "--epsilon 5 --mass 3");
  REQUIRE(res.exit_code == 0);
  OutputRecord rec = parse_csv(res.output);
  CHECK(rec.columns ==
        std::vector<std::string>{"z", "Z1_re", "Z1_im", "Z2_re", "Z2_im"});
  REQUIRE(rec.rows.size() == 161);
  std::vector<double> mag;
  double peak = 0.0;
  double peak_z = 0.0;
  for (const auto& row : rec.rows) {
    double m = std::abs(std::complex<double>(row[1], row[2]));
    mag.push_back(m);
    if (m > peak) {
      peak = m;
      peak_z = row[0];
    }
  }
  // Left tail is exponentially suppressed; the right tail only loses the
  // exponential prefactor gradually (oscillating bounded behavior), so the
  // honest bound there is much weaker.
  CHECK(mag.front() < 0.02 * peak);
  CHECK(mag.back() < 0.2 * peak);
  CHECK(std::fabs(peak_z) <= 1.0);
}

TEST_CASE("wavefunction rejects a level with no positive lambda_sq") {
  // n=0 has lambda_sq = 0: degenerate separation, surfaced as a usage error.
  RunResult res = run_cli("wavefunction --B 5 --m 1/2 --n 0 --table radial", true);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("degenerate separation") != std::string::npos);
}

TEST_CASE("limit table: 1/rho^2 law and exact flat column") {
  RunResult res = run_cli("limit --B0 1 --n 2 --variant 3 --rho 10,20");
  REQUIRE(res.exit_code == 0);
  OutputRecord rec = parse_csv(res.output);
  CHECK(rec.columns ==
        std::vector<std::string>{"rho", "lambda0_sq_curved", "lambda0_sq_flat", "rel_error"});
  REQUIRE(rec.rows.size() == 2);
  CHECK(rec.rows[0][0] == 10.0);
  CHECK(rec.rows[0][1] == doctest::Approx(3.96).epsilon(1e-12));
  CHECK(rec.rows[0][2] == 4.0);
  CHECK(rec.rows[0][3] == doctest::Approx(0.01).epsilon(1e-10));
  // Doubling rho quarters the relative error.
  CHECK(rec.rows[0][3] / rec.rows[1][3] == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("limit variant 4 uses the shifted level index") {
  RunResult res = run_cli("limit --B0 1 --n 2 --m=-1/2 --variant 4 --rho 10");
  REQUIRE(res.exit_code == 0);
  OutputRecord rec = parse_csv(res.output);
  REQUIRE(rec.rows.size() == 1);
  // k = n - m + 1/2 = 3, so the flat level is 2*B0*k = 6.
  CHECK(rec.rows[0][2] == 6.0);
  CHECK(rec.rows[0][1] == doctest::Approx(5.91).epsilon(1e-12));
  CHECK(rec.rows[0][3] == doctest::Approx(0.015).epsilon(1e-10));
}

TEST_CASE("geometry table: embedding defect, metric signs, potential, connection") {
  RunResult res = run_cli("geometry --r 1 --z 0.5 --B 5");
  REQUIRE(res.exit_code == 0);
  OutputRecord rec = parse_csv(res.output);
  REQUIRE(rec.columns.size() == 19);
  REQUIRE(rec.rows.size() == 1);
  const auto& row = rec.rows[0];
  auto col = [&](const std::string& name) {
    for (size_t i = 0; i < rec.columns.size(); ++i)
      if (rec.columns[i] == name) return row[i];
    FAIL("missing column ", name);
    return 0.0;
  };
  CHECK(col("hyperboloid_defect") < 1e-14);
  CHECK(col("g_zz") == -1.0);
  CHECK(col("A_phi") == doctest::Approx(-5.0 * (std::cosh(1.0) - 1.0)).epsilon(1e-14));
  CHECK(col("Gamma_r_rz") == doctest::Approx(std::tanh(0.5)).epsilon(1e-14));
  CHECK(col("Gamma_phi_rphi") == doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-14));
}
