#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "howelab/matrix_model.hpp"

namespace howelab {

/// Real-valued observable on Mat(n x m; C) with declared shape.
struct SmoothObservable {
  int n = 0;
  int m = 0;
  std::function<double(const Eigen::MatrixXcd&)> eval;

  double operator()(const Eigen::MatrixXcd& z) const { return eval(z); }
};

/// Phi_1^xi as an observable (xi in u(n)).
SmoothObservable moment1_observable(Eigen::MatrixXcd xi, int m);

/// Phi_2^eta as an observable (eta in u(m)).
SmoothObservable moment2_observable(Eigen::MatrixXcd eta, int n);

/// Linear observable Re tr(C^dagger z).
SmoothObservable linear_observable(Eigen::MatrixXcd coeff);

/// Flat-space Poisson structure on Mat(n x m; C) viewed as R^{2nm} with the
/// real basis {E_pq, i E_pq}.  The constant form matrix Omega is assembled
/// once from omega_mat; hamiltonian vector fields solve omega(X_g, .) = dg
/// and brackets are {f, g} = df(X_g), with gradients taken by central
/// differences of absolute step fd_step.
class FlatPoissonStructure {
 public:
  FlatPoissonStructure(int n, int m, double fd_step = 1e-5);

  int n() const { return n_; }
  int m() const { return m_; }
  double fd_step() const { return fd_step_; }
  int real_dimension() const { return 2 * n_ * m_; }

  Eigen::VectorXd to_real_coords(const Eigen::MatrixXcd& z) const;
  Eigen::MatrixXcd from_real_coords(const Eigen::VectorXd& x) const;

  /// Central-difference gradient in the real basis.  Throws on non-finite
  /// values.
  Eigen::VectorXd gradient(const SmoothObservable& f,
                           const Eigen::MatrixXcd& z) const;

  /// Hamiltonian vector field X_g at z, as real coordinates.
  Eigen::VectorXd hamiltonian_field(const SmoothObservable& g,
                                    const Eigen::MatrixXcd& z) const;

  double bracket(const SmoothObservable& f, const SmoothObservable& g,
                 const MatrixPoint& z) const;

  const Eigen::MatrixXd& omega_matrix() const { return omega_; }

 private:
  int n_;
  int m_;
  double fd_step_;
  Eigen::MatrixXd omega_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

/// One-shot convenience wrapper around FlatPoissonStructure.
double poisson_bracket_mat(const SmoothObservable& f, const SmoothObservable& g,
                           const MatrixPoint& z, double fd_step = 1e-5);

/// Deviation of the bracket sign convention: max over a few random points
/// and both group factors of |xi^M(f) - {f, Phi^xi}| for linear f, for
/// which the directional derivative is exact.
double bracket_sign_convention_deviation(int n, int m,
                                         std::uint64_t seed = 0x5ca1ab1eULL);

/// Startup self-check: throws std::logic_error when the deviation above
/// exceeds 1e-6.
void check_bracket_sign_convention(int n, int m,
                                   std::uint64_t seed = 0x5ca1ab1eULL);

}  // namespace howelab
