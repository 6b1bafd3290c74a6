#include "howelab/projective_model.hpp"

#include <numbers>
#include <stdexcept>

namespace howelab {

ProjectivePoint::ProjectivePoint(Eigen::VectorXcd homogeneous, int level)
    : homogeneous_(std::move(homogeneous)), level_(level) {
  if (homogeneous_.size() < 2)
    throw std::invalid_argument("ProjectivePoint: need at least P_1");
  if (homogeneous_.norm() == 0.0)
    throw std::invalid_argument("ProjectivePoint: homogeneous vector is zero");
  if (level_ < 1)
    throw std::invalid_argument("ProjectivePoint: level must be positive");
}

double moment_fs(const ProjectivePoint& p, const Eigen::MatrixXcd& zeta) {
  const auto& z = p.homogeneous();
  if (zeta.rows() != z.size() || zeta.cols() != z.size())
    throw std::invalid_argument("moment_fs: zeta must act on C^{n+1}");
  const std::complex<double> pairing = z.dot(zeta * z);  // <z, zeta z>
  const double norm_sq = z.squaredNorm();
  // (i/2pi) * (purely imaginary pairing) is real
  return -p.level() * pairing.imag() / (2.0 * std::numbers::pi * norm_sq);
}

Eigen::MatrixXcd u1_generator(int n) {
  Eigen::MatrixXcd zeta = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  zeta(0, 0) = std::complex<double>(0.0, 2.0 * std::numbers::pi);
  return zeta;
}

SkewHermitian moment_fs_un(const ProjectivePoint& p) {
  const auto& z = p.homogeneous();
  const Eigen::VectorXcd w = z.tail(p.n());
  const std::complex<double> coeff(
      0.0, p.level() / (2.0 * std::numbers::pi * z.squaredNorm()));
  return SkewHermitian(coeff * (w * w.adjoint()));
}

}  // namespace howelab
