#include "howelab/sampling.hpp"

namespace howelab {

Eigen::MatrixXcd complex_gaussian_matrix(SplitMix64& rng, int rows, int cols) {
  Eigen::MatrixXcd out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = rng.complex_gaussian();
  return out;
}

Eigen::MatrixXcd haar_unitary(SplitMix64& rng, int size) {
  const Eigen::MatrixXcd gauss = complex_gaussian_matrix(rng, size, size);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gauss);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (int i = 0; i < size; ++i) {
    const std::complex<double> d = r(i, i);
    const double mag = std::abs(d);
    q.col(i) *= (mag > 0.0) ? d / mag : 1.0;
  }
  return q;
}

MatrixPoint random_matrix_point(SplitMix64& rng, int n, int m) {
  return MatrixPoint(complex_gaussian_matrix(rng, n, m));
}

SkewHermitian random_skew_hermitian(SplitMix64& rng, int size) {
  const Eigen::MatrixXcd gauss = complex_gaussian_matrix(rng, size, size);
  return SkewHermitian(0.5 * (gauss - gauss.adjoint()));
}

ProjectivePoint random_projective_point(SplitMix64& rng, int n, int level) {
  Eigen::VectorXcd z(n + 1);
  for (int i = 0; i <= n; ++i) z(i) = rng.complex_gaussian();
  if (z.norm() == 0.0) z(0) = 1.0;  // measure-zero safeguard
  return ProjectivePoint(std::move(z), level);
}

}  // namespace howelab
