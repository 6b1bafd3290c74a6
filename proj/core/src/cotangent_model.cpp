#include "howelab/cotangent_model.hpp"

#include <stdexcept>

namespace howelab {

CotangentPoint::CotangentPoint(Eigen::MatrixXcd group_element,
                               SkewHermitian covector, double tol)
    : group_element_(std::move(group_element)), covector_(std::move(covector)) {
  const int n = covector_.size();
  if (group_element_.rows() != n || group_element_.cols() != n)
    throw std::invalid_argument("CotangentPoint: size mismatch");
  const double dev = (group_element_.adjoint() * group_element_ -
                      Eigen::MatrixXcd::Identity(n, n))
                         .cwiseAbs()
                         .maxCoeff();
  if (dev > tol)
    throw std::invalid_argument("CotangentPoint: group element not unitary");
}

SkewHermitian moment1_cot(const CotangentPoint& p) { return p.covector(); }

SkewHermitian moment2_cot(const CotangentPoint& p) {
  const auto& g = p.group_element();
  return SkewHermitian(-(g.adjoint() * p.covector().entries() * g));
}

}  // namespace howelab
