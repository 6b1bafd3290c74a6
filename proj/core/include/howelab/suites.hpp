#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "howelab/correspondence.hpp"
#include "howelab/report.hpp"

namespace howelab {

/// Bracket-vanishing, invariance, equivariance and Fubini-Study range
/// checks for the matrix and projective moment maps.
struct MomentSuiteOptions {
  int n = 3;
  int m = 2;
  int samples = 100;
  std::uint64_t seed = 42;
  double fd_step = 1e-5;
  double bracket_tol = 1e-6;
  int fs_dim = 2;    // projective dimension for the range check
  int fs_level = 2;  // Fubini-Study scaling k
  bool parallel = false;
};
VerificationReport run_moment_suite(const MomentSuiteOptions& opts);

/// Spectral correspondence, reduced-space dimensions, integrality
/// preservation and the per-model Lambda checks.
struct CorrespondenceSuiteOptions {
  CorrespondenceModel model = CorrespondenceModel::matrix;
  int n = 3;
  int m = 2;
  std::string sigma_grid = "auto";
  int samples = 200;
  std::uint64_t seed = 42;
  int rank = 3;   // cotangent model
  int level = 2;  // projective model scaling k
  bool parallel = false;
};
VerificationReport run_correspondence_suite(
    const CorrespondenceSuiteOptions& opts);

/// Exact per-degree decomposition identities.
struct DualitySuiteOptions {
  CorrespondenceModel model = CorrespondenceModel::matrix;  // or projective
  int n = 2;
  int m = 2;
  int k_max = 8;
  std::string emit_table;  // CSV output path; empty writes nothing
};
VerificationReport run_duality_suite(const DualitySuiteOptions& opts);

/// Steepest-descent behaviour of ||Phi||^2 from seeded random starts.
struct FlowSuiteOptions {
  int n = 2;
  int m = 2;
  int steps = 1000;
  double step_size = 1e-2;
  std::uint64_t seed = 7;
  int starts = 20;
  bool parallel = false;
};
VerificationReport run_flow_suite(const FlowSuiteOptions& opts);

/// "auto" for the built-in grid, otherwise semicolon-separated sigma
/// vectors of comma-separated values, e.g. "2,1;1.5,1.5".
std::vector<SigmaVector> parse_sigma_grid(const std::string& spec, int m);

}  // namespace howelab
