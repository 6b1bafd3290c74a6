#pragma once

#include <Eigen/Dense>

#include "howelab/skew_hermitian.hpp"

namespace howelab {

/// Point [z] of P_n(C) with the Fubini-Study form scaled by a positive
/// integer level k.  The homogeneous vector has n+1 entries and must be
/// nonzero.
class ProjectivePoint {
 public:
  ProjectivePoint(Eigen::VectorXcd homogeneous, int level);

  int n() const { return static_cast<int>(homogeneous_.size()) - 1; }
  int level() const { return level_; }
  const Eigen::VectorXcd& homogeneous() const { return homogeneous_; }

 private:
  Eigen::VectorXcd homogeneous_;
  int level_;
};

/// Moment-map component for zeta in u(n+1):
///   Phi^zeta([z]) = k (i/2pi) <z, zeta z> / <z, z>,
/// with <.,.> linear in the second argument.  Scale-invariant in z.
double moment_fs(const ProjectivePoint& p, const Eigen::MatrixXcd& zeta);

/// Generator of the embedded U(1) subgroup: diag(2 pi i, 0, ..., 0) in
/// u(n+1).  Its moment value lies in [-k, 0].
Eigen::MatrixXcd u1_generator(int n);

/// Matrix-form moment map of the embedded U(n) (acting on the last n
/// homogeneous coordinates): i k / (2 pi <z,z>) * w w^dagger with
/// w = (z_1, ..., z_n).  Its label, scaled by 2 pi, is the orbit through
/// (x + k) phi_11 where x is the U(1)-moment value.
SkewHermitian moment_fs_un(const ProjectivePoint& p);

}  // namespace howelab
