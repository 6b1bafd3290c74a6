// howelab CLI: runs the verification suites with reproducible seeds and
// emits structured JSON reports (plus optional CSV decomposition tables).
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "howelab/poisson.hpp"
#include "howelab/suites.hpp"
#include "howelab/version.hpp"

namespace {

using howelab::CorrespondenceModel;
using howelab::VerificationReport;

struct OutputOptions {
  std::string report_file;
  bool print_json = false;
};

int finish(const VerificationReport& report, const OutputOptions& out) {
  int passed = 0;
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "[pass] " : "[FAIL] ") << c.id
              << "  measured=" << c.measured << "  tolerance=";
    if (c.exact)
      std::cout << "exact";
    else
      std::cout << c.tolerance;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    if (c.passed) ++passed;
  }
  for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
  std::cout << "suite " << report.suite << ": "
            << (report.passed() ? "PASS" : "FAIL") << " (" << passed << "/"
            << report.checks.size() << " checks)\n";

  std::string path = out.report_file;
  if (path.empty()) {
    if (const char* dir = std::getenv("HOWELAB_REPORT_DIR")) {
      path = (std::filesystem::path(dir) /
              (report.suite + "-seed" + std::to_string(report.seed) + ".json"))
                 .string();
    }
  }
  if (!path.empty()) {
    howelab::write_report_file(report, path);
    std::cout << "report: " << path << "\n";
  }
  if (out.print_json) std::cout << report.to_json() << "\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(howelab::kArtifactName) + " " +
               howelab::kArtifactVersion +
               " - verification laboratory for commuting unitary moment maps"};
  app.require_subcommand(1);

  OutputOptions out;
  bool parallel = false;
  app.add_option("--report-file", out.report_file,
                 "write the JSON report to this path (default: "
                 "$HOWELAB_REPORT_DIR/<suite>-seed<seed>.json if the "
                 "environment variable is set)");
  app.add_flag("--print-json", out.print_json,
               "dump the JSON report to stdout");
  app.add_flag("--parallel", parallel,
               "evaluate independent samples on multiple threads "
               "(aggregation order stays deterministic)");

  const std::map<std::string, CorrespondenceModel> model_names{
      {"matrix", CorrespondenceModel::matrix},
      {"cotangent", CorrespondenceModel::cotangent},
      {"projective", CorrespondenceModel::projective}};

  howelab::MomentSuiteOptions moment_opts;
  CLI::App* moment = app.add_subcommand(
      "verify-moment",
      "bracket vanishing, moment invariance/equivariance, Fubini-Study range");
  moment->fallthrough();
  moment->add_option("--n", moment_opts.n, "left factor U(n)");
  moment->add_option("--m", moment_opts.m, "right factor U(m), m <= n");
  moment->add_option("--samples", moment_opts.samples, "sample count");
  moment->add_option("--seed", moment_opts.seed, "64-bit RNG seed");
  moment->add_option("--fd-step", moment_opts.fd_step,
                     "central-difference step");
  moment->add_option("--tol", moment_opts.bracket_tol,
                     "bracket-vanishing tolerance");
  moment->add_option("--fs-dim", moment_opts.fs_dim,
                     "projective dimension for the range check");
  moment->add_option("--fs-level", moment_opts.fs_level,
                     "Fubini-Study scaling k");

  howelab::CorrespondenceSuiteOptions corr_opts;
  CLI::App* corr = app.add_subcommand(
      "verify-correspondence",
      "spectral correspondence, reduced-space dimensions, integrality");
  corr->fallthrough();
  corr->add_option("--model", corr_opts.model, "matrix|cotangent|projective")
      ->transform(CLI::CheckedTransformer(model_names, CLI::ignore_case));
  corr->add_option("--n", corr_opts.n, "left factor U(n) / projective dim");
  corr->add_option("--m", corr_opts.m, "right factor U(m), m <= n");
  corr->add_option("--sigma-grid", corr_opts.sigma_grid,
                   "\"auto\" or sigma vectors like \"2,1;1.5,1.5\"");
  corr->add_option("--samples", corr_opts.samples, "sample count");
  corr->add_option("--seed", corr_opts.seed, "64-bit RNG seed");
  corr->add_option("--rank", corr_opts.rank, "cotangent model rank N");
  corr->add_option("--k", corr_opts.level, "projective model scaling k");

  howelab::DualitySuiteOptions dual_opts;
  CLI::App* dual = app.add_subcommand(
      "verify-duality", "exact per-degree decomposition identities");
  dual->fallthrough();
  dual->add_option("--model", dual_opts.model, "matrix|projective")
      ->transform(CLI::CheckedTransformer(model_names, CLI::ignore_case));
  dual->add_option("--n", dual_opts.n, "left factor U(n) / projective dim");
  dual->add_option("--m", dual_opts.m, "right factor U(m), m <= n");
  dual->add_option("--k-max", dual_opts.k_max, "largest degree checked");
  dual->add_option("--emit-table", dual_opts.emit_table,
                   "write the decomposition tables as CSV to this path");

  howelab::FlowSuiteOptions flow_opts;
  CLI::App* flow = app.add_subcommand(
      "flow", "steepest descent of ||Phi||^2 from random starts");
  flow->fallthrough();
  flow->add_option("--n", flow_opts.n, "left factor U(n)");
  flow->add_option("--m", flow_opts.m, "right factor U(m), m <= n");
  flow->add_option("--steps", flow_opts.steps, "descent steps");
  flow->add_option("--step-size", flow_opts.step_size, "initial Euler step");
  flow->add_option("--seed", flow_opts.seed, "64-bit RNG seed");
  flow->add_option("--starts", flow_opts.starts, "number of random starts");

  try {
    app.parse(argc, argv);

    if (moment->parsed()) {
      moment_opts.parallel = parallel;
      if (moment_opts.m < 1 || moment_opts.n < moment_opts.m)
        throw std::invalid_argument("verify-moment requires n >= m >= 1");
      // abort early if the sign convention of the numerical bracket is off
      howelab::check_bracket_sign_convention(moment_opts.n, moment_opts.m,
                                             moment_opts.seed);
      return finish(run_moment_suite(moment_opts), out);
    }
    if (corr->parsed()) {
      corr_opts.parallel = parallel;
      return finish(run_correspondence_suite(corr_opts), out);
    }
    if (dual->parsed()) {
      return finish(run_duality_suite(dual_opts), out);
    }
    if (flow->parsed()) {
      flow_opts.parallel = parallel;
      return finish(run_flow_suite(flow_opts), out);
    }
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification aborted: " << e.what() << "\n";
    return 1;
  }
}
