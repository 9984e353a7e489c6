// End-to-end tests that drive the installed binary through a shell.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string binary() {
  const char* env = std::getenv("ROBUST_WALD_BIN");
  REQUIRE(env != nullptr);
  return env;
}

fs::path work_dir() {
  const fs::path p = fs::temp_directory_path() / "robust-wald-cli-tests";
  fs::create_directories(p);
  return p;
}

int run(const std::string& args) {
  const std::string cmd =
      binary() + " " + args + " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  REQUIRE(out.good());
  out << text;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json run_json(const std::string& args, const fs::path& out) {
  REQUIRE(run(args + " --output " + out.string()) == 0);
  return json::parse(slurp(out));
}

// Minimal structural check of a report against its shipped schema: the
// required top-level keys exist and carry the declared primitive type.
void check_schema(const json& report, const std::string& schema_name) {
  const fs::path schema_path =
      fs::path(binary()).parent_path() / "schemas" / schema_name;
  const json schema = json::parse(slurp(schema_path));
  for (const auto& key : schema.at("required")) {
    const std::string k = key.get<std::string>();
    REQUIRE(report.contains(k));
    const json& props = schema.at("properties").at(k);
    if (props.contains("type")) {
      const std::string t = props.at("type").get<std::string>();
      if (t == "array") CHECK(report.at(k).is_array());
      if (t == "object") CHECK(report.at(k).is_object());
      if (t == "string") CHECK(report.at(k).is_string());
      if (t == "number") CHECK(report.at(k).is_number());
    }
  }
}

const std::string kLocationCsv =
    "x\n-1.1\n0.4\n0.9\n-0.3\n0.5\n0.1\n-0.6\n1.2\n";

}  // namespace

TEST_CASE("fit recovers the sample mean at beta = 0") {
  const fs::path dir = work_dir();
  write_file(dir / "loc.csv", kLocationCsv);
  const json rep = run_json(
      "fit --model normal-loc --beta 0 --data " + (dir / "loc.csv").string(),
      dir / "fit.json");
  check_schema(rep, "fit-report.schema.json");
  CHECK(rep["results"][0]["n"] == 8);
  const double mean = (-1.1 + 0.4 + 0.9 - 0.3 + 0.5 + 0.1 - 0.6 + 1.2) / 8.0;
  CHECK(rep["results"][0]["theta_hat"][0].get<double>() ==
        doctest::Approx(mean).epsilon(1e-8));
  // Known unit scale: the standard error is exactly 1/sqrt(n).
  CHECK(rep["results"][0]["standard_errors"][0].get<double>() ==
        doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-8));
}

TEST_CASE("weibull fit lands near unit shape on exponential-type data") {
  const fs::path dir = work_dir();
  // Quantile grid of the unit exponential: shape should fit close to 1.
  std::ostringstream csv;
  csv << "x\n";
  for (int i = 1; i <= 40; ++i) csv << -std::log(i / 41.0) << "\n";
  write_file(dir / "exp.csv", csv.str());
  const json rep = run_json(
      "fit --model weibull-shape --beta 0.25 --data " +
          (dir / "exp.csv").string(),
      dir / "wfit.json");
  const double shape = rep["results"][0]["theta_hat"][0].get<double>();
  CHECK(shape > 0.85);
  CHECK(shape < 1.2);
}

TEST_CASE("regression fit matches least squares at beta = 0") {
  const fs::path dir = work_dir();
  std::ostringstream design, resp;
  design << "intercept,x\n";
  resp << "y\n";
  for (int i = 0; i < 10; ++i) {
    const double xi = -1.0 + 0.25 * i;
    design << "1," << xi << "\n";
    resp << 0.3 + 1.1 * xi + 0.1 * ((i % 4) - 1.5) << "\n";
  }
  write_file(dir / "design.csv", design.str());
  write_file(dir / "resp.csv", resp.str());
  const json rep = run_json(
      "fit --model linreg --beta 0 --design " + (dir / "design.csv").string() +
          " --data " + (dir / "resp.csv").string(),
      dir / "lfit.json");
  CHECK(rep["results"][0]["theta_hat"][0].get<double>() ==
        doctest::Approx(0.3).epsilon(0.15));
  CHECK(rep["results"][0]["theta_hat"][1].get<double>() ==
        doctest::Approx(1.1).epsilon(0.05));
}

TEST_CASE("test subcommand produces a full report") {
  const fs::path dir = work_dir();
  write_file(dir / "loc.csv", kLocationCsv);
  const json rep = run_json(
      "test --model normal-loc --beta 0,0.5 --theta0 0 --data " +
          (dir / "loc.csv").string(),
      dir / "test.json");
  check_schema(rep, "test-report.schema.json");
  REQUIRE(rep["results"].size() == 2);
  for (const auto& r : rep["results"]) {
    CHECK(r["df"] == 1);
    CHECK(r["p_value"].get<double>() > 0.0);
    CHECK(r["critical_value"].get<double>() ==
          doctest::Approx(3.841458820694124).epsilon(1e-8));
  }
}

TEST_CASE("power table emits rounded CSV and is deterministic") {
  const fs::path dir = work_dir();
  const std::string args =
      "power-table --model weibull-shape --beta 0,0.25 --theta0 1 "
      "--d 0,1,2 --format csv --round 3";
  REQUIRE(run(args + " --output " + (dir / "p1.csv").string()) == 0);
  REQUIRE(run(args + " --output " + (dir / "p2.csv").string()) == 0);
  const std::string a = slurp(dir / "p1.csv");
  CHECK(a == slurp(dir / "p2.csv"));  // byte-identical reruns
  std::istringstream lines(a);
  std::string header, row0;
  std::getline(lines, header);
  std::getline(lines, row0);
  CHECK(header == "d,beta=0,beta=0.25");
  // d = 0: the power is the level, rounded to three digits.
  CHECK(row0 == "0.000,0.050,0.050");
}

TEST_CASE("influence subcommand covers csv and json formats") {
  const fs::path dir = work_dir();
  const json rep = run_json(
      "influence --model weibull-shape --beta 0.5 --theta0 1 --d 2",
      dir / "infl.json");
  check_schema(rep, "influence.schema.json");
  REQUIRE(rep["rows"].size() == 301);
  CHECK(rep["columns"] ==
        json::array({"beta", "x", "if_norm", "if2", "pif"}));

  REQUIRE(run("influence --model weibull-shape --beta 0.5 --theta0 1 --d 2 "
              "--format csv --output " +
              (dir / "infl.csv").string()) == 0);
  std::istringstream lines(slurp(dir / "infl.csv"));
  std::string header;
  std::getline(lines, header);
  CHECK(header == "beta,x,if_norm,if2,pif");
}

TEST_CASE("csif subcommand reports a consistent slope") {
  const fs::path dir = work_dir();
  const json rep = run_json(
      "csif --model normal-loc --beta 0.5 --theta0 0 --epsilon 0.05 --point 2",
      dir / "csif.json");
  check_schema(rep, "csif-report.schema.json");
  const auto& r = rep["results"][0];
  CHECK(r["c_bar_trace"].get<double>() > 1.0);
  CHECK(r["slope_residual"].get<double>() < 1e-3);
}

TEST_CASE("exit codes distinguish usage, data, and numerical failures") {
  const fs::path dir = work_dir();
  write_file(dir / "loc.csv", kLocationCsv);
  // Usage: unknown model, missing required flag.
  CHECK(run("fit --model no-such-model --beta 0 --data " +
            (dir / "loc.csv").string()) == 1);
  CHECK(run("fit --model normal-loc --beta 0") == 1);
  // Data: a missing cell, and observations outside the model support.
  write_file(dir / "broken.csv", "x\n1.0\nabc\n2.0\n");
  CHECK(run("fit --model normal-loc --beta 0 --data " +
            (dir / "broken.csv").string()) == 2);
  write_file(dir / "neg.csv", "x\n1.0\n-2.0\n");
  CHECK(run("fit --model weibull-shape --beta 0.25 --data " +
            (dir / "neg.csv").string()) == 2);
  // Numerical: a noncentrality far beyond what the tail series can sum.
  CHECK(run("power-table --model weibull-shape --beta 0 --theta0 1 "
            "--d 100000") == 3);
}
