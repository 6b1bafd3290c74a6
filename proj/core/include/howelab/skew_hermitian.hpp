#pragma once

#include <Eigen/Dense>
#include <vector>

#include "howelab/orbit_label.hpp"

namespace howelab {

/// Element of u(N), doubling as an element of u(N)* through the trace form
/// zeta |-> tr(. zeta).  Construction checks A + A^dagger = 0 within tol.
class SkewHermitian {
 public:
  explicit SkewHermitian(Eigen::MatrixXcd entries, double tol = 1e-10);

  int size() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  double frobenius_norm() const { return entries_.norm(); }

  /// Eigenvalues of -i * entries (a hermitian matrix), sorted descending.
  /// These are the real numbers l_j with spectrum {i*l_j}.
  std::vector<double> spectrum() const;

  /// Coadjoint orbit through this element.
  CoadjointOrbitLabel label() const { return CoadjointOrbitLabel(spectrum()); }

  static SkewHermitian zero(int size);

 private:
  Eigen::MatrixXcd entries_;
};

}  // namespace howelab
