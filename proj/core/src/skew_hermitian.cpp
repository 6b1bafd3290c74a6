#include "howelab/skew_hermitian.hpp"

#include <stdexcept>

namespace howelab {

SkewHermitian::SkewHermitian(Eigen::MatrixXcd entries, double tol)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
    throw std::invalid_argument("SkewHermitian: matrix must be square");
  const double dev = (entries_ + entries_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw std::invalid_argument(
        "SkewHermitian: A + A^dagger exceeds tolerance");
}

std::vector<double> SkewHermitian::spectrum() const {
  const Eigen::MatrixXcd hermitian =
      std::complex<double>(0.0, -1.0) * entries_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("SkewHermitian::spectrum: eigensolver failed");
  Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  std::vector<double> out(ev.size());
  for (int i = 0; i < ev.size(); ++i) out[i] = ev[ev.size() - 1 - i];
  return out;
}

SkewHermitian SkewHermitian::zero(int size) {
  return SkewHermitian(Eigen::MatrixXcd::Zero(size, size));
}

}  // namespace howelab
