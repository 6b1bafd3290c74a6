#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace howelab {

/// Outcome of a single named check.  Every check carries either a numeric
/// tolerance or the "exact" tag.
struct CheckResult {
  std::string id;
  bool passed = false;
  double measured = 0.0;  // max deviation (0 for clean exact checks)
  double tolerance = 0.0;
  bool exact = false;
  std::string detail;

  static CheckResult numeric(std::string id, double measured, double tol,
                             std::string detail = "");
  static CheckResult exact_check(std::string id, bool passed,
                                 double deviation = 0.0,
                                 std::string detail = "");
};

using ParamValue = std::variant<std::int64_t, double, std::string>;

/// Structured record of one suite run.  Serialized as a single JSON
/// document with stable field names (schema version in version.hpp); for
/// fixed flags and seed the document is reproducible byte for byte when
/// SOURCE_DATE_EPOCH pins the timestamp.
struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::map<std::string, ParamValue> params;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  void add(CheckResult check) { checks.push_back(std::move(check)); }
  bool passed() const;

  std::string to_json() const;
};

void write_report_file(const VerificationReport& report,
                       const std::string& path);

}  // namespace howelab
