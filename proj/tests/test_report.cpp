#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "howelab/report.hpp"
#include "howelab/suites.hpp"
#include "howelab/version.hpp"
#include "json.hpp"

using namespace howelab;

namespace {

struct EpochGuard {
  EpochGuard() { setenv("SOURCE_DATE_EPOCH", "0", 1); }
  ~EpochGuard() { unsetenv("SOURCE_DATE_EPOCH"); }
};

}  // namespace

TEST_CASE("check results carry a tolerance or the exact tag") {
  const CheckResult numeric = CheckResult::numeric("x", 0.5, 1.0);
  CHECK(numeric.passed);
  CHECK_FALSE(numeric.exact);
  CHECK(numeric.tolerance == 1.0);

  const CheckResult failing = CheckResult::numeric("x", 2.0, 1.0);
  CHECK_FALSE(failing.passed);

  const CheckResult exact = CheckResult::exact_check("y", true);
  CHECK(exact.exact);
  CHECK(exact.passed);
}

TEST_CASE("report status aggregates the checks") {
  VerificationReport report;
  report.suite = "demo";
  report.add(CheckResult::exact_check("a", true));
  CHECK(report.passed());
  report.add(CheckResult::numeric("b", 2.0, 1.0));
  CHECK_FALSE(report.passed());
}

TEST_CASE("JSON documents have the stable schema fields") {
  const EpochGuard epoch;
  VerificationReport report;
  report.suite = "demo";
  report.seed = 42;
  report.params = {{"n", std::int64_t{3}},
                   {"tol", 1e-6},
                   {"model", std::string("matrix")}};
  report.add(CheckResult::numeric("a", 0.0, 1e-9, "5 samples"));
  report.add(CheckResult::exact_check("b", true));

  const nlohmann::json doc = nlohmann::json::parse(report.to_json());
  CHECK(doc["artifact"] == kArtifactName);
  CHECK(doc["artifact_version"] == kArtifactVersion);
  CHECK(doc["report_schema"] == kReportSchemaVersion);
  CHECK(doc["suite"] == "demo");
  CHECK(doc["seed"] == 42);
  CHECK(doc["generated_at"] == "1970-01-01T00:00:00Z");
  CHECK(doc["params"]["n"] == 3);
  CHECK(doc["params"]["model"] == "matrix");
  CHECK(doc["status"] == "pass");
  REQUIRE(doc["checks"].size() == 2);
  CHECK(doc["checks"][0]["tolerance"] == 1e-9);
  CHECK(doc["checks"][1]["tolerance"] == "exact");
  for (const auto& check : doc["checks"]) {
    CHECK(check.contains("tolerance"));
    CHECK(check.contains("status"));
    CHECK(check.contains("measured"));
  }
}

TEST_CASE("suite reports are byte-reproducible for fixed flags and seed") {
  const EpochGuard epoch;
  MomentSuiteOptions opts;
  opts.n = 2;
  opts.m = 2;
  opts.samples = 8;
  opts.seed = 7;
  const std::string first = run_moment_suite(opts).to_json();
  const std::string second = run_moment_suite(opts).to_json();
  CHECK(first == second);

  // parallel evaluation must not change the aggregated document
  opts.parallel = true;
  CHECK(run_moment_suite(opts).to_json() == first);
}

TEST_CASE("reports round-trip through files") {
  const EpochGuard epoch;
  VerificationReport report;
  report.suite = "demo";
  report.add(CheckResult::exact_check("a", true));
  const auto path =
      std::filesystem::temp_directory_path() / "howelab_report_test.json";
  write_report_file(report, path.string());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(nlohmann::json::parse(buffer.str()) ==
        nlohmann::json::parse(report.to_json()));
  std::filesystem::remove(path);
}

TEST_CASE("every suite check is labelled with a tolerance or exact") {
  FlowSuiteOptions flow;
  flow.starts = 2;
  flow.steps = 50;
  const VerificationReport report = run_flow_suite(flow);
  CHECK(report.checks.size() >= 3);
  for (const auto& c : report.checks) CHECK((c.exact || c.tolerance > 0.0));
}
