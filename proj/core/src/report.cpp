#include "howelab/report.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "howelab/version.hpp"
#include "json.hpp"

namespace howelab {

CheckResult CheckResult::numeric(std::string id, double measured, double tol,
                                 std::string detail) {
  CheckResult c;
  c.id = std::move(id);
  c.measured = measured;
  c.tolerance = tol;
  c.passed = measured <= tol;
  c.exact = false;
  c.detail = std::move(detail);
  return c;
}

CheckResult CheckResult::exact_check(std::string id, bool passed,
                                     double deviation, std::string detail) {
  CheckResult c;
  c.id = std::move(id);
  c.passed = passed;
  c.measured = deviation;
  c.exact = true;
  c.detail = std::move(detail);
  return c;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

std::string iso8601_timestamp() {
  std::time_t t;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::time(nullptr);
  }
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

std::string VerificationReport::to_json() const {
  nlohmann::json doc;
  doc["artifact"] = kArtifactName;
  doc["artifact_version"] = kArtifactVersion;
  doc["report_schema"] = kReportSchemaVersion;
  doc["suite"] = suite;
  doc["generated_at"] = iso8601_timestamp();
  doc["seed"] = seed;

  nlohmann::json jparams = nlohmann::json::object();
  for (const auto& [key, value] : params) {
    std::visit([&](const auto& v) { jparams[key] = v; }, value);
  }
  doc["params"] = jparams;

  nlohmann::json jchecks = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["status"] = c.passed ? "pass" : "fail";
    jc["measured"] = c.measured;
    if (c.exact)
      jc["tolerance"] = "exact";
    else
      jc["tolerance"] = c.tolerance;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    jchecks.push_back(jc);
  }
  doc["checks"] = jchecks;
  doc["warnings"] = warnings;
  doc["status"] = passed() ? "pass" : "fail";
  return doc.dump(2);
}

void write_report_file(const VerificationReport& report,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("write_report_file: cannot open " + path);
  out << report.to_json() << "\n";
}

}  // namespace howelab
