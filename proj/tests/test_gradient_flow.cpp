#include <cmath>

#include "doctest.h"
#include "howelab/gradient_flow.hpp"
#include "howelab/sampling.hpp"

using namespace howelab;

TEST_CASE("zero is a stationary point of the flow") {
  const GradientFlowResult run =
      gradient_flow_norm_sq(MatrixPoint::zero(2, 2), 100, 1e-2);
  CHECK(run.trajectory.size() == 101);
  for (const auto& step : run.trajectory) {
    CHECK(step.mu == 0.0);
    CHECK(step.point.frobenius_norm() == 0.0);
  }
  CHECK(run.halvings == 0);
  CHECK_FALSE(run.step_underflow);
  CHECK(run.norm_growth() == 1.0);
}

TEST_CASE("mu decreases along random trajectories") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const MatrixPoint z0 = random_matrix_point(rng, 2, 2);
    const GradientFlowResult run = gradient_flow_norm_sq(z0, 1000, 1e-2);
    CHECK(run.mu_weakly_decreasing());
    CHECK_FALSE(run.step_underflow);
    CHECK(run.trajectory.back().mu < run.trajectory.front().mu);
    CHECK(run.norm_growth() <= 10.0);
  }
}

TEST_CASE("trajectory from the normal form stays in a compact set") {
  const MatrixPoint z0 = MatrixPoint::sigma_normal_form({1.0, 1.0}, 2);
  const GradientFlowResult run = gradient_flow_norm_sq(z0, 1000, 1e-2);
  CHECK(run.mu_weakly_decreasing());
  CHECK(run.max_norm <= run.initial_norm * (1.0 + 1e-12));
  CHECK(run.norm_growth() <= 10.0);
}

TEST_CASE("oversized steps trigger halving but keep monotonicity") {
  SplitMix64 rng(42);
  const MatrixPoint z0 = random_matrix_point(rng, 2, 2);
  const GradientFlowResult run = gradient_flow_norm_sq(z0, 200, 10.0);
  CHECK(run.halvings > 0);
  CHECK(run.mu_weakly_decreasing());
  CHECK_FALSE(run.step_underflow);
}

TEST_CASE("analytic gradient matches central differences") {
  SplitMix64 rng(43);
  const double h = 1e-5;
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixPoint z = random_matrix_point(rng, 3, 2);
    const Eigen::MatrixXcd direction = complex_gaussian_matrix(rng, 3, 2);
    const double fd =
        (moment_norm_sq(MatrixPoint(z.entries() + h * direction)) -
         moment_norm_sq(MatrixPoint(z.entries() - h * direction))) /
        (2.0 * h);
    const double analytic =
        (moment_norm_sq_gradient(z).adjoint() * direction).trace().real();
    CHECK(fd == doctest::Approx(analytic).epsilon(1e-6));
  }
}

TEST_CASE("mu is the trace-form norm of the joint moment map") {
  const MatrixPoint z = MatrixPoint::sigma_normal_form({2.0, 1.0}, 3);
  // singular values (2,1): mu = 1/4 (16+1) + 1/4 (16+1)
  CHECK(moment_norm_sq(z) == doctest::Approx(8.5));
}

TEST_CASE("flow input validation") {
  CHECK_THROWS_AS(gradient_flow_norm_sq(MatrixPoint::zero(2, 2), -1, 1e-2),
                  std::invalid_argument);
  CHECK_THROWS_AS(gradient_flow_norm_sq(MatrixPoint::zero(2, 2), 10, 0.0),
                  std::invalid_argument);
}
