#pragma once

#include <Eigen/Dense>

#include "howelab/skew_hermitian.hpp"

namespace howelab {

/// Point of T*U(N) in the right trivialization: a unitary group element g
/// and a covector stored on the Lie-algebra side of the trace form.
class CotangentPoint {
 public:
  CotangentPoint(Eigen::MatrixXcd group_element, SkewHermitian covector,
                 double tol = 1e-10);

  int rank() const { return covector_.size(); }
  const Eigen::MatrixXcd& group_element() const { return group_element_; }
  const SkewHermitian& covector() const { return covector_; }

 private:
  Eigen::MatrixXcd group_element_;
  SkewHermitian covector_;
};

/// Left-action moment map: (g, alpha) |-> alpha.
SkewHermitian moment1_cot(const CotangentPoint& p);

/// Right-action moment map: (g, alpha) |-> -Ad*(g^{-1}) alpha, i.e.
/// -g^{-1} alpha g under the trace-form identification.
SkewHermitian moment2_cot(const CotangentPoint& p);

}  // namespace howelab
