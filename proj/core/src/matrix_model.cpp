#include "howelab/matrix_model.hpp"

#include <stdexcept>

namespace howelab {

namespace {
const std::complex<double> kHalfI(0.0, 0.5);
}

MatrixPoint::MatrixPoint(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
  if (entries_.cols() < 1 || entries_.rows() < entries_.cols())
    throw std::invalid_argument("MatrixPoint: requires n >= m >= 1");
}

MatrixPoint MatrixPoint::zero(int n, int m) {
  return MatrixPoint(Eigen::MatrixXcd::Zero(n, m));
}

MatrixPoint MatrixPoint::sigma_normal_form(const std::vector<double>& sigma,
                                           int n) {
  const int m = static_cast<int>(sigma.size());
  if (m < 1 || n < m)
    throw std::invalid_argument("sigma_normal_form: requires n >= m >= 1");
  for (int i = 0; i < m; ++i) {
    if (sigma[i] < 0.0 || (i > 0 && sigma[i - 1] < sigma[i]))
      throw std::invalid_argument(
          "sigma_normal_form: sigma must be weakly decreasing and >= 0");
  }
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(n, m);
  for (int i = 0; i < m; ++i) z(i, i) = sigma[i];
  return MatrixPoint(std::move(z));
}

double omega_mat(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("omega_mat: shape mismatch");
  return (A.adjoint() * B).trace().imag();
}

SkewHermitian moment1_mat(const MatrixPoint& z) {
  const auto& e = z.entries();
  return SkewHermitian(kHalfI * (e * e.adjoint()));
}

SkewHermitian moment2_mat(const MatrixPoint& z) {
  const auto& e = z.entries();
  return SkewHermitian(-kHalfI * (e.adjoint() * e));
}

double moment1_component(const Eigen::MatrixXcd& xi,
                         const Eigen::MatrixXcd& z) {
  return -0.5 * (xi * z * z.adjoint()).trace().imag();
}

double moment2_component(const Eigen::MatrixXcd& eta,
                         const Eigen::MatrixXcd& z) {
  return 0.5 * (eta * z.adjoint() * z).trace().imag();
}

}  // namespace howelab
