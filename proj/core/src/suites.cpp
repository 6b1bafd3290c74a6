#include "howelab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <thread>

#include "howelab/cotangent_model.hpp"
#include "howelab/gradient_flow.hpp"
#include "howelab/poisson.hpp"
#include "howelab/projective_model.hpp"
#include "howelab/quantization.hpp"
#include "howelab/sampling.hpp"

namespace howelab {

namespace {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Per-check stream: decorrelates the sampled checks while keeping every
/// stream a pure function of (seed, check id, sample index).
std::uint64_t check_seed(std::uint64_t seed, std::string_view check_id) {
  return seed ^ fnv1a64(check_id);
}

/// Max of fn(0..count-1); identical result in serial and parallel mode.
double max_over_samples(int count, bool parallel,
                        const std::function<double(int)>& fn) {
  if (count <= 0) return 0.0;
  std::vector<double> results(static_cast<std::size_t>(count), 0.0);
  if (!parallel || count < 2) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
  } else {
    const int workers = std::min<int>(
        std::max(1u, std::thread::hardware_concurrency()), count);
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (int i = next++; i < count; i = next++) {
          try {
            results[i] = fn(i);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }
  return *std::max_element(results.begin(), results.end());
}

std::string sample_detail(int count) {
  return std::to_string(count) + " samples";
}

double entrywise_dev(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

SmoothObservable quadratic_observable(int n, int m, SplitMix64& rng) {
  const int dim = 2 * n * m;
  Eigen::MatrixXd form(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b <= a; ++b) {
      const double v = rng.gaussian();
      form(a, b) = v;
      form(b, a) = v;
    }
  return {n, m, [form, n, m](const Eigen::MatrixXcd& z) {
            Eigen::VectorXd x(2 * n * m);
            for (int p = 0; p < n; ++p)
              for (int q = 0; q < m; ++q) {
                x(2 * (p * m + q)) = z(p, q).real();
                x(2 * (p * m + q) + 1) = z(p, q).imag();
              }
            return x.dot(form * x);
          }};
}

}  // namespace

VerificationReport run_moment_suite(const MomentSuiteOptions& opts) {
  if (opts.m < 1 || opts.n < opts.m)
    throw std::invalid_argument("moment suite: requires n >= m >= 1");
  if (opts.samples < 0)
    throw std::invalid_argument("moment suite: negative sample count");

  VerificationReport report;
  report.suite = "verify-moment";
  report.seed = opts.seed;
  report.params = {{"n", static_cast<std::int64_t>(opts.n)},
                   {"m", static_cast<std::int64_t>(opts.m)},
                   {"samples", static_cast<std::int64_t>(opts.samples)},
                   {"fd_step", opts.fd_step},
                   {"tol", opts.bracket_tol},
                   {"fs_dim", static_cast<std::int64_t>(opts.fs_dim)},
                   {"fs_level", static_cast<std::int64_t>(opts.fs_level)}};
  if (opts.samples == 0)
    report.warnings.push_back("samples=0: sampled checks are vacuous");

  report.add(CheckResult::numeric(
      "bracket-sign-selfcheck",
      bracket_sign_convention_deviation(
          opts.n, opts.m, check_seed(opts.seed, "bracket-sign-selfcheck")),
      1e-6));

  const FlatPoissonStructure structure(opts.n, opts.m, opts.fd_step);

  {
    const std::uint64_t cs = check_seed(opts.seed, "bracket-vanishing");
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const MatrixPoint z = random_matrix_point(rng, opts.n, opts.m);
          const SkewHermitian xi = random_skew_hermitian(rng, opts.n);
          const SkewHermitian eta = random_skew_hermitian(rng, opts.m);
          return std::abs(
              structure.bracket(moment1_observable(xi.entries(), opts.m),
                                moment2_observable(eta.entries(), opts.n), z));
        });
    report.add(CheckResult::numeric("bracket-vanishing", dev, opts.bracket_tol,
                                    sample_detail(opts.samples)));
  }

  {
    const std::uint64_t cs = check_seed(opts.seed, "bracket-antisymmetry");
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const SmoothObservable f = quadratic_observable(opts.n, opts.m, rng);
          const SmoothObservable g = quadratic_observable(opts.n, opts.m, rng);
          const MatrixPoint z = random_matrix_point(rng, opts.n, opts.m);
          return std::abs(structure.bracket(f, g, z) +
                          structure.bracket(g, f, z));
        });
    report.add(CheckResult::numeric("bracket-antisymmetry", dev, 1e-8,
                                    sample_detail(opts.samples)));
  }

  {
    const std::uint64_t cs = check_seed(opts.seed, "moment1-invariance");
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const MatrixPoint z = random_matrix_point(rng, opts.n, opts.m);
          const Eigen::MatrixXcd v = haar_unitary(rng, opts.m);
          const MatrixPoint moved = MatrixPoint(z.entries() * v.adjoint());
          return entrywise_dev(moment1_mat(moved).entries(),
                               moment1_mat(z).entries());
        });
    report.add(CheckResult::numeric("moment1-invariance", dev, 1e-10,
                                    sample_detail(opts.samples)));
  }

  {
    const std::uint64_t cs = check_seed(opts.seed, "moment2-invariance");
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const MatrixPoint z = random_matrix_point(rng, opts.n, opts.m);
          const Eigen::MatrixXcd u = haar_unitary(rng, opts.n);
          const MatrixPoint moved = MatrixPoint(u * z.entries());
          return entrywise_dev(moment2_mat(moved).entries(),
                               moment2_mat(z).entries());
        });
    report.add(CheckResult::numeric("moment2-invariance", dev, 1e-10,
                                    sample_detail(opts.samples)));
  }

  {
    const std::uint64_t cs = check_seed(opts.seed, "moment1-equivariance");
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const MatrixPoint z = random_matrix_point(rng, opts.n, opts.m);
          const Eigen::MatrixXcd u = haar_unitary(rng, opts.n);
          const MatrixPoint moved = MatrixPoint(u * z.entries());
          const Eigen::MatrixXcd conjugated =
              u * moment1_mat(z).entries() * u.adjoint();
          return entrywise_dev(moment1_mat(moved).entries(), conjugated);
        });
    report.add(CheckResult::numeric("moment1-equivariance", dev, 1e-10,
                                    sample_detail(opts.samples)));
  }

  {
    const std::uint64_t cs = check_seed(opts.seed, "moment2-equivariance");
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const MatrixPoint z = random_matrix_point(rng, opts.n, opts.m);
          const Eigen::MatrixXcd v = haar_unitary(rng, opts.m);
          const MatrixPoint moved = MatrixPoint(z.entries() * v.adjoint());
          const Eigen::MatrixXcd conjugated =
              v * moment2_mat(z).entries() * v.adjoint();
          return entrywise_dev(moment2_mat(moved).entries(), conjugated);
        });
    report.add(CheckResult::numeric("moment2-equivariance", dev, 1e-10,
                                    sample_detail(opts.samples)));
  }

  {
    const std::uint64_t cs = check_seed(opts.seed, "fs-range");
    const Eigen::MatrixXcd zeta = u1_generator(opts.fs_dim);
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const ProjectivePoint p =
              random_projective_point(rng, opts.fs_dim, opts.fs_level);
          const double x = moment_fs(p, zeta);
          return std::max({0.0, x, -static_cast<double>(opts.fs_level) - x});
        });
    report.add(CheckResult::numeric("fs-range", dev, 1e-12,
                                    sample_detail(opts.samples)));
  }

  return report;
}

namespace {

void add_matrix_correspondence_checks(VerificationReport& report,
                                      const CorrespondenceSuiteOptions& opts) {
  const std::vector<SigmaVector> grid =
      parse_sigma_grid(opts.sigma_grid, opts.m);

  {
    const std::uint64_t cs = check_seed(opts.seed, "spectral-correspondence");
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const MatrixPoint z = random_matrix_point(rng, opts.n, opts.m);
          return verify_spectral_correspondence(z).measured;
        });
    report.add(CheckResult::numeric("spectral-correspondence", dev, 1e-9,
                                    sample_detail(opts.samples)));
  }

  {
    // Constructive level-set test: z' = zW lies in the same Phi_1 level and
    // the transition W recovered as (z^dagger z)^{-1} z^dagger z' is unitary.
    const std::uint64_t cs = check_seed(opts.seed, "level-set-recovery");
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const MatrixPoint z = random_matrix_point(rng, opts.n, opts.m);
          const Eigen::MatrixXcd w = haar_unitary(rng, opts.m);
          const Eigen::MatrixXcd moved = z.entries() * w;
          const Eigen::MatrixXcd gram = z.entries().adjoint() * z.entries();
          const Eigen::MatrixXcd recovered =
              gram.ldlt().solve(z.entries().adjoint() * moved);
          const double unitary_dev =
              (recovered.adjoint() * recovered -
               Eigen::MatrixXcd::Identity(opts.m, opts.m))
                  .cwiseAbs()
                  .maxCoeff();
          const double level_dev =
              entrywise_dev(moment1_mat(MatrixPoint(moved)).entries(),
                            moment1_mat(z).entries());
          return std::max(unitary_dev, level_dev);
        });
    report.add(CheckResult::numeric("level-set-recovery", dev, 1e-8,
                                    sample_detail(opts.samples)));
  }

  {
    int failures = 0;
    std::string first;
    for (const SigmaVector& sigma : grid) {
      const CheckResult c = reduced_space_dimension_check(sigma, opts.n);
      if (!c.passed) {
        ++failures;
        if (first.empty()) first = c.detail;
      }
    }
    report.add(CheckResult::exact_check(
        "reduced-space-dimension", failures == 0, failures,
        failures ? first : std::to_string(grid.size()) + " sigma vectors"));
  }

  {
    int failures = 0;
    for (const SigmaVector& sigma : grid) {
      if (!integrality_preserved(lambda_matrix(sigma, opts.n))) ++failures;
    }
    report.add(CheckResult::exact_check(
        "integrality-preservation", failures == 0, failures,
        std::to_string(grid.size()) + " sigma vectors"));
  }

  {
    int violations = 0;
    std::vector<CorrespondencePair> pairs;
    pairs.reserve(grid.size());
    for (const SigmaVector& sigma : grid)
      pairs.push_back(lambda_matrix(sigma, opts.n));
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        const bool same_source = pairs[i].source.approx_equal(pairs[j].source);
        const bool same_target = pairs[i].target.approx_equal(pairs[j].target);
        if (same_source != same_target) ++violations;
      }
    report.add(CheckResult::exact_check("lambda-injectivity", violations == 0,
                                        violations,
                                        std::to_string(grid.size()) +
                                            " sigma vectors, pairwise"));
  }

  {
    int failures = 0;
    for (const SigmaVector& sigma : grid) {
      if (level_set_dimension_via_orbits(sigma, opts.n) !=
          level_set_dimension_via_stabilizers(sigma, opts.n))
        ++failures;
    }
    report.add(CheckResult::exact_check("level-set-dimension-consistency",
                                        failures == 0, failures,
                                        std::to_string(grid.size()) +
                                            " sigma vectors, two routes"));
  }

  {
    // paired labels bound a point reduction, mismatched labels the empty set
    int failures = 0;
    std::vector<CorrespondencePair> pairs;
    pairs.reserve(grid.size());
    for (const SigmaVector& sigma : grid)
      pairs.push_back(lambda_matrix(sigma, opts.n));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!joint_preimage_nonempty(pairs[i].source, pairs[i].target))
        ++failures;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (i == j) continue;
        if (pairs[i].source.approx_equal(pairs[j].source)) continue;
        if (joint_preimage_nonempty(pairs[i].source, pairs[j].target))
          ++failures;
      }
    }
    report.add(CheckResult::exact_check("joint-preimage-certificate",
                                        failures == 0, failures,
                                        "paired vs mismatched labels"));
  }
}

void add_cotangent_correspondence_checks(
    VerificationReport& report, const CorrespondenceSuiteOptions& opts) {
  const int rank = opts.rank;
  if (rank < 1)
    throw std::invalid_argument("cotangent suite: rank must be positive");

  const auto random_label = [&](SplitMix64& rng, bool integral) {
    std::vector<double> spectrum(static_cast<std::size_t>(rank));
    for (double& v : spectrum) {
      v = integral ? std::floor(rng.uniform() * 11.0) - 5.0 : rng.gaussian();
    }
    return CoadjointOrbitLabel(std::move(spectrum));
  };

  {
    const std::uint64_t cs = check_seed(opts.seed, "cotangent-involution");
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const CoadjointOrbitLabel alpha = random_label(rng, i % 2 == 0);
          const CoadjointOrbitLabel twice =
              lambda_cotangent(lambda_cotangent(alpha).target).target;
          double d = 0.0;
          for (int j = 0; j < rank; ++j)
            d = std::max(d,
                         std::abs(twice.spectrum()[j] - alpha.spectrum()[j]));
          return d;
        });
    report.add(CheckResult::exact_check("cotangent-involution", dev == 0.0,
                                        dev, sample_detail(opts.samples)));
  }

  {
    const std::uint64_t cs = check_seed(opts.seed, "cotangent-integrality");
    int failures = 0;
    for (int i = 0; i < opts.samples; ++i) {
      SplitMix64 rng = SplitMix64::substream(cs, i);
      const CoadjointOrbitLabel alpha = random_label(rng, i % 2 == 0);
      if (!integrality_preserved(lambda_cotangent(alpha))) ++failures;
    }
    report.add(CheckResult::exact_check("cotangent-integrality", failures == 0,
                                        failures,
                                        sample_detail(opts.samples)));
  }

  {
    const std::uint64_t cs =
        check_seed(opts.seed, "cotangent-moment-lambda-consistency");
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const Eigen::MatrixXcd g = haar_unitary(rng, rank);
          const SkewHermitian alpha = random_skew_hermitian(rng, rank);
          const CotangentPoint p(g, alpha);
          const CoadjointOrbitLabel alpha_label = alpha.label();
          double d = 0.0;
          const std::vector<double> m1 = moment1_cot(p).spectrum();
          for (int j = 0; j < rank; ++j)
            d = std::max(d, std::abs(m1[j] - alpha_label.spectrum()[j]));
          const CoadjointOrbitLabel expected =
              lambda_cotangent(alpha_label).target;
          const std::vector<double> m2 = moment2_cot(p).spectrum();
          for (int j = 0; j < rank; ++j)
            d = std::max(d, std::abs(m2[j] - expected.spectrum()[j]));
          return d;
        });
    report.add(CheckResult::numeric("cotangent-moment-lambda-consistency", dev,
                                    1e-9, sample_detail(opts.samples)));
  }
}

void add_projective_correspondence_checks(
    VerificationReport& report, const CorrespondenceSuiteOptions& opts) {
  const int n = opts.n;
  const int level = opts.level;
  if (n < 1 || level < 1)
    throw std::invalid_argument("projective suite: requires n, k >= 1");

  {
    const CorrespondencePair at_bottom =
        lambda_projective(-static_cast<double>(level), level, n);
    const CorrespondencePair at_top = lambda_projective(0.0, level, n);
    double dev = 0.0;
    for (double v : at_bottom.target.spectrum()) dev = std::max(dev, std::abs(v));
    dev = std::max(dev, std::abs(at_top.target.spectrum()[0] - level));
    for (int i = 1; i < n; ++i)
      dev = std::max(dev, std::abs(at_top.target.spectrum()[i]));
    dev = std::max(dev, static_cast<double>(orbit_dimension(at_bottom.target)));
    report.add(CheckResult::exact_check(
        "projective-endpoints", dev == 0.0, dev,
        "x=-k gives the point orbit, x=0 gives [k,0,...]"));
  }

  {
    int failures = 0;
    int cases = 0;
    for (int d = 0; d <= level; ++d, ++cases) {
      const CorrespondencePair pair =
          lambda_projective(-static_cast<double>(d), level, n);
      if (!is_integral(pair.source) || !is_integral(pair.target) ||
          !integrality_preserved(pair))
        ++failures;
    }
    for (int d = 0; d < level; ++d, ++cases) {
      const CorrespondencePair pair =
          lambda_projective(-(d + 0.5), level, n);
      if (is_integral(pair.source) || is_integral(pair.target) ||
          !integrality_preserved(pair))
        ++failures;
    }
    report.add(CheckResult::exact_check(
        "projective-integrality", failures == 0, failures,
        std::to_string(cases) + " grid points in [-k, 0]"));
  }

  {
    const std::uint64_t cs =
        check_seed(opts.seed, "projective-moment-lambda-consistency");
    const Eigen::MatrixXcd zeta = u1_generator(n);
    const double dev =
        max_over_samples(opts.samples, opts.parallel, [&](int i) {
          SplitMix64 rng = SplitMix64::substream(cs, i);
          const ProjectivePoint p = random_projective_point(rng, n, level);
          const double x = moment_fs(p, zeta);
          const CoadjointOrbitLabel expected =
              lambda_projective(x, level, n).target;
          const std::vector<double> spec = moment_fs_un(p).spectrum();
          double d = 0.0;
          for (int j = 0; j < n; ++j)
            d = std::max(d, std::abs(2.0 * std::numbers::pi * spec[j] -
                                     expected.spectrum()[j]));
          return d;
        });
    report.add(CheckResult::numeric("projective-moment-lambda-consistency",
                                    dev, 1e-9, sample_detail(opts.samples)));
  }
}

}  // namespace

VerificationReport run_correspondence_suite(
    const CorrespondenceSuiteOptions& opts) {
  if (opts.samples < 0)
    throw std::invalid_argument("correspondence suite: negative sample count");

  VerificationReport report;
  report.suite = "verify-correspondence";
  report.seed = opts.seed;
  report.params = {{"model", to_string(opts.model)},
                   {"samples", static_cast<std::int64_t>(opts.samples)}};
  if (opts.samples == 0)
    report.warnings.push_back("samples=0: sampled checks are vacuous");

  switch (opts.model) {
    case CorrespondenceModel::matrix:
      if (opts.m < 1 || opts.n < opts.m)
        throw std::invalid_argument(
            "correspondence suite: requires n >= m >= 1");
      report.params["n"] = static_cast<std::int64_t>(opts.n);
      report.params["m"] = static_cast<std::int64_t>(opts.m);
      report.params["sigma_grid"] = opts.sigma_grid;
      add_matrix_correspondence_checks(report, opts);
      break;
    case CorrespondenceModel::cotangent:
      report.params["rank"] = static_cast<std::int64_t>(opts.rank);
      add_cotangent_correspondence_checks(report, opts);
      break;
    case CorrespondenceModel::projective:
      report.params["n"] = static_cast<std::int64_t>(opts.n);
      report.params["k"] = static_cast<std::int64_t>(opts.level);
      add_projective_correspondence_checks(report, opts);
      break;
  }
  return report;
}

VerificationReport run_duality_suite(const DualitySuiteOptions& opts) {
  if (opts.k_max < 0)
    throw std::invalid_argument("duality suite: negative k_max");

  VerificationReport report;
  report.suite = "verify-duality";
  report.seed = 0;  // exact suite, no sampling
  report.params = {{"model", to_string(opts.model)},
                   {"k_max", static_cast<std::int64_t>(opts.k_max)},
                   {"n", static_cast<std::int64_t>(opts.n)}};

  std::vector<DecompositionTable> tables;
  if (opts.model == CorrespondenceModel::matrix) {
    report.params["m"] = static_cast<std::int64_t>(opts.m);
    tables = matrix_quantization_table(opts.n, opts.m, opts.k_max);
  } else if (opts.model == CorrespondenceModel::projective) {
    tables.reserve(static_cast<std::size_t>(opts.k_max) + 1);
    for (int k = 0; k <= opts.k_max; ++k)
      tables.push_back(projective_decomposition_check(opts.n, k));
  } else {
    throw std::invalid_argument(
        "duality suite: no finite dimension identity for the cotangent model");
  }

  const std::string id_prefix = opts.model == CorrespondenceModel::matrix
                                    ? "gl-duality-identity-k"
                                    : "projective-identity-k";
  int mult_failures = 0;
  int pairing_failures = 0;
  for (const auto& table : tables) {
    std::ostringstream detail;
    detail << "lhs=" << table.lhs << " rhs=" << table.rhs << ", "
           << table.rows.size() << " rows";
    report.add(CheckResult::exact_check(
        id_prefix + std::to_string(table.degree), table.passes(),
        table.passes() ? 0.0 : 1.0, detail.str()));
    if (!table.multiplicity_free()) ++mult_failures;
    if (!table.pairing_injective()) ++pairing_failures;
  }
  report.add(CheckResult::exact_check("multiplicity-free", mult_failures == 0,
                                      mult_failures));
  report.add(CheckResult::exact_check("pairing-injective",
                                      pairing_failures == 0,
                                      pairing_failures));

  if (!opts.emit_table.empty()) {
    std::ofstream out(opts.emit_table);
    if (!out)
      throw std::runtime_error("verify-duality: cannot open " +
                               opts.emit_table);
    out << tables_to_csv(tables);
  }
  return report;
}

VerificationReport run_flow_suite(const FlowSuiteOptions& opts) {
  if (opts.m < 1 || opts.n < opts.m)
    throw std::invalid_argument("flow suite: requires n >= m >= 1");
  if (opts.steps < 0 || opts.starts < 0 || !(opts.step_size > 0.0))
    throw std::invalid_argument("flow suite: bad steps/starts/step-size");

  VerificationReport report;
  report.suite = "flow";
  report.seed = opts.seed;
  report.params = {{"n", static_cast<std::int64_t>(opts.n)},
                   {"m", static_cast<std::int64_t>(opts.m)},
                   {"steps", static_cast<std::int64_t>(opts.steps)},
                   {"step_size", opts.step_size},
                   {"starts", static_cast<std::int64_t>(opts.starts)},
                   {"inner_product", std::string("trace-form")}};
  if (opts.starts == 0)
    report.warnings.push_back("starts=0: sampled checks are vacuous");

  const std::uint64_t cs = check_seed(opts.seed, "flow-monotonicity");
  std::vector<GradientFlowResult> runs(static_cast<std::size_t>(opts.starts));
  max_over_samples(opts.starts, opts.parallel, [&](int i) {
    SplitMix64 rng = SplitMix64::substream(cs, i);
    runs[i] = gradient_flow_norm_sq(random_matrix_point(rng, opts.n, opts.m),
                                    opts.steps, opts.step_size);
    return 0.0;
  });

  int violations = 0;
  double max_growth = 0.0;
  int total_halvings = 0;
  for (const auto& run : runs) {
    if (!run.mu_weakly_decreasing() || run.step_underflow) ++violations;
    max_growth = std::max(max_growth, run.norm_growth());
    total_halvings += run.halvings;
  }
  report.add(CheckResult::exact_check(
      "flow-monotonicity", violations == 0, violations,
      std::to_string(opts.starts) + " starts, " +
          std::to_string(total_halvings) + " step halvings"));
  report.add(CheckResult::numeric("flow-boundedness",
                                  opts.starts ? max_growth : 0.0, 10.0,
                                  "max trajectory norm over initial norm"));

  {
    const GradientFlowResult zero_run = gradient_flow_norm_sq(
        MatrixPoint::zero(opts.n, opts.m), opts.steps, opts.step_size);
    double dev = zero_run.max_norm;
    for (const auto& step : zero_run.trajectory)
      dev = std::max(dev, std::abs(step.mu));
    report.add(CheckResult::exact_check("flow-zero-start", dev == 0.0, dev,
                                        "stationary trajectory from z=0"));
  }
  return report;
}

std::vector<SigmaVector> parse_sigma_grid(const std::string& spec, int m) {
  if (spec == "auto") return auto_sigma_grid(m);
  std::vector<SigmaVector> grid;
  std::stringstream stream(spec);
  std::string vector_token;
  while (std::getline(stream, vector_token, ';')) {
    if (vector_token.empty()) continue;
    std::vector<double> values;
    std::stringstream inner(vector_token);
    std::string value_token;
    while (std::getline(inner, value_token, ',')) {
      std::size_t used = 0;
      const double v = std::stod(value_token, &used);
      if (used != value_token.size())
        throw std::invalid_argument("sigma grid: bad value '" + value_token +
                                    "'");
      values.push_back(v);
    }
    if (static_cast<int>(values.size()) != m)
      throw std::invalid_argument("sigma grid: entry '" + vector_token +
                                  "' does not have m=" + std::to_string(m) +
                                  " values");
    grid.emplace_back(std::move(values));
  }
  if (grid.empty()) throw std::invalid_argument("sigma grid: empty grid");
  return grid;
}

}  // namespace howelab
