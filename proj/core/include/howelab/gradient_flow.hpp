#pragma once

#include <Eigen/Dense>
#include <vector>

#include "howelab/matrix_model.hpp"

namespace howelab {

/// mu(z) = ||Phi_1(z)||^2 + ||Phi_2(z)||^2 for the joint moment map of the
/// matrix model, with the Ad-invariant trace-form norm <X,Y> = -tr(XY) on
/// u(n) (+) u(m).
double moment_norm_sq(const MatrixPoint& z);

/// Gradient of mu in the flat Kaehler metric Re tr(A^dagger B): 2 z z^dagger z.
Eigen::MatrixXcd moment_norm_sq_gradient(const MatrixPoint& z);

struct FlowStep {
  MatrixPoint point;
  double mu;
};

struct GradientFlowResult {
  std::vector<FlowStep> trajectory;  // steps + 1 entries
  double initial_norm = 0.0;
  double max_norm = 0.0;
  int halvings = 0;
  bool step_underflow = false;  // non-convergence: halving hit machine epsilon

  bool mu_weakly_decreasing() const;
  /// max trajectory norm over initial norm; 1 for the stationary zero start.
  double norm_growth() const;
};

/// Discrete steepest-descent path of -mu from z0: explicit Euler with the
/// step halved whenever a candidate increases mu.
GradientFlowResult gradient_flow_norm_sq(const MatrixPoint& z0, int steps,
                                         double step_size);

}  // namespace howelab
