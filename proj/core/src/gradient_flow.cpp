#include "howelab/gradient_flow.hpp"

#include <limits>
#include <stdexcept>

namespace howelab {

double moment_norm_sq(const MatrixPoint& z) {
  const SkewHermitian phi1 = moment1_mat(z);
  const SkewHermitian phi2 = moment2_mat(z);
  // -tr(X X) = ||X||_F^2 for skew-hermitian X
  return phi1.frobenius_norm() * phi1.frobenius_norm() +
         phi2.frobenius_norm() * phi2.frobenius_norm();
}

Eigen::MatrixXcd moment_norm_sq_gradient(const MatrixPoint& z) {
  const auto& e = z.entries();
  return 2.0 * (e * e.adjoint() * e);
}

bool GradientFlowResult::mu_weakly_decreasing() const {
  for (std::size_t i = 1; i < trajectory.size(); ++i) {
    if (trajectory[i].mu > trajectory[i - 1].mu) return false;
  }
  return true;
}

double GradientFlowResult::norm_growth() const {
  if (initial_norm == 0.0) return max_norm == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return max_norm / initial_norm;
}

GradientFlowResult gradient_flow_norm_sq(const MatrixPoint& z0, int steps,
                                         double step_size) {
  if (steps < 0) throw std::invalid_argument("gradient_flow: negative steps");
  if (!(step_size > 0.0))
    throw std::invalid_argument("gradient_flow: step size must be positive");

  GradientFlowResult result;
  result.initial_norm = z0.frobenius_norm();
  result.max_norm = result.initial_norm;

  MatrixPoint z = z0;
  double mu = moment_norm_sq(z);
  result.trajectory.push_back({z, mu});

  double step = step_size;
  for (int i = 0; i < steps; ++i) {
    const Eigen::MatrixXcd grad = moment_norm_sq_gradient(z);
    MatrixPoint candidate = MatrixPoint(z.entries() - step * grad);
    double mu_candidate = moment_norm_sq(candidate);
    while (mu_candidate > mu) {
      step *= 0.5;
      ++result.halvings;
      if (step < std::numeric_limits<double>::epsilon()) {
        result.step_underflow = true;
        return result;
      }
      candidate = MatrixPoint(z.entries() - step * grad);
      mu_candidate = moment_norm_sq(candidate);
    }
    z = std::move(candidate);
    mu = mu_candidate;
    result.trajectory.push_back({z, mu});
    result.max_norm = std::max(result.max_norm, z.frobenius_norm());
  }
  return result;
}

}  // namespace howelab
