#pragma once

#include <Eigen/Dense>
#include <vector>

#include "howelab/skew_hermitian.hpp"

namespace howelab {

/// Point of M = Mat(n x m; C) with n >= m >= 1, carrying the symplectic
/// structure omega(A, B) = Im tr(A^dagger B) and the U(n) x U(m) action
/// z |-> U z V^{-1}.
class MatrixPoint {
 public:
  explicit MatrixPoint(Eigen::MatrixXcd entries);

  int n() const { return static_cast<int>(entries_.rows()); }
  int m() const { return static_cast<int>(entries_.cols()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  double frobenius_norm() const { return entries_.norm(); }

  static MatrixPoint zero(int n, int m);

  /// Diagonal normal form Sigma(sigma): sigma on the main diagonal, padded
  /// with zero rows to height n.  Requires sigma weakly decreasing >= 0.
  static MatrixPoint sigma_normal_form(const std::vector<double>& sigma,
                                       int n);

 private:
  Eigen::MatrixXcd entries_;
};

/// omega(A, B) = Im tr(A^dagger B).  Throws on shape mismatch.
double omega_mat(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B);

/// Moment map of the left U(n) action in matrix form: (i/2) z z^dagger.
SkewHermitian moment1_mat(const MatrixPoint& z);

/// Moment map of the right U(m) action in matrix form: -(i/2) z^dagger z.
SkewHermitian moment2_mat(const MatrixPoint& z);

/// Component functions: Phi_1^xi(z) = -(1/2) Im tr(xi z z^dagger) and
/// Phi_2^eta(z) = (1/2) Im tr(eta z^dagger z), equal to tr(xi moment1) and
/// tr(eta moment2) under the trace-form identification.
double moment1_component(const Eigen::MatrixXcd& xi, const Eigen::MatrixXcd& z);
double moment2_component(const Eigen::MatrixXcd& eta,
                         const Eigen::MatrixXcd& z);

}  // namespace howelab
