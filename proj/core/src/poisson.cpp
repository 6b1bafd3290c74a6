#include "howelab/poisson.hpp"

#include <cmath>
#include <stdexcept>

#include "howelab/sampling.hpp"

namespace howelab {

SmoothObservable moment1_observable(Eigen::MatrixXcd xi, int m) {
  const int n = static_cast<int>(xi.rows());
  return {n, m, [xi = std::move(xi)](const Eigen::MatrixXcd& z) {
            return moment1_component(xi, z);
          }};
}

SmoothObservable moment2_observable(Eigen::MatrixXcd eta, int n) {
  const int m = static_cast<int>(eta.rows());
  return {n, m, [eta = std::move(eta)](const Eigen::MatrixXcd& z) {
            return moment2_component(eta, z);
          }};
}

SmoothObservable linear_observable(Eigen::MatrixXcd coeff) {
  const int n = static_cast<int>(coeff.rows());
  const int m = static_cast<int>(coeff.cols());
  return {n, m, [coeff = std::move(coeff)](const Eigen::MatrixXcd& z) {
            return (coeff.adjoint() * z).trace().real();
          }};
}

FlatPoissonStructure::FlatPoissonStructure(int n, int m, double fd_step)
    : n_(n), m_(m), fd_step_(fd_step) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("FlatPoissonStructure: bad shape");
  if (!(fd_step > 0.0))
    throw std::invalid_argument("FlatPoissonStructure: bad fd step");
  const int dim = real_dimension();
  omega_.resize(dim, dim);
  for (int a = 0; a < dim; ++a) {
    Eigen::VectorXd ea = Eigen::VectorXd::Zero(dim);
    ea(a) = 1.0;
    const Eigen::MatrixXcd basis_a = from_real_coords(ea);
    for (int b = 0; b < dim; ++b) {
      Eigen::VectorXd eb = Eigen::VectorXd::Zero(dim);
      eb(b) = 1.0;
      omega_(a, b) = omega_mat(basis_a, from_real_coords(eb));
    }
  }
  lu_.compute(omega_);
}

Eigen::VectorXd FlatPoissonStructure::to_real_coords(
    const Eigen::MatrixXcd& z) const {
  Eigen::VectorXd x(real_dimension());
  for (int p = 0; p < n_; ++p)
    for (int q = 0; q < m_; ++q) {
      x(2 * (p * m_ + q)) = z(p, q).real();
      x(2 * (p * m_ + q) + 1) = z(p, q).imag();
    }
  return x;
}

Eigen::MatrixXcd FlatPoissonStructure::from_real_coords(
    const Eigen::VectorXd& x) const {
  Eigen::MatrixXcd z(n_, m_);
  for (int p = 0; p < n_; ++p)
    for (int q = 0; q < m_; ++q)
      z(p, q) = {x(2 * (p * m_ + q)), x(2 * (p * m_ + q) + 1)};
  return z;
}

Eigen::VectorXd FlatPoissonStructure::gradient(const SmoothObservable& f,
                                               const Eigen::MatrixXcd& z) const {
  const int dim = real_dimension();
  Eigen::VectorXd grad(dim);
  Eigen::MatrixXcd zp = z;
  for (int a = 0; a < dim; ++a) {
    const int p = (a / 2) / m_;
    const int q = (a / 2) % m_;
    const std::complex<double> delta =
        (a % 2 == 0) ? std::complex<double>(fd_step_, 0.0)
                     : std::complex<double>(0.0, fd_step_);
    zp(p, q) = z(p, q) + delta;
    const double fwd = f(zp);
    zp(p, q) = z(p, q) - delta;
    const double bwd = f(zp);
    zp(p, q) = z(p, q);
    grad(a) = (fwd - bwd) / (2.0 * fd_step_);
    if (!std::isfinite(grad(a)))
      throw std::runtime_error("FlatPoissonStructure: non-finite gradient");
  }
  return grad;
}

Eigen::VectorXd FlatPoissonStructure::hamiltonian_field(
    const SmoothObservable& g, const Eigen::MatrixXcd& z) const {
  // omega(X_g, e_b) = dg(e_b) for all b reads Omega^T X = grad g, and
  // Omega^T = -Omega for the antisymmetric form matrix.
  return lu_.solve(-gradient(g, z));
}

double FlatPoissonStructure::bracket(const SmoothObservable& f,
                                     const SmoothObservable& g,
                                     const MatrixPoint& z) const {
  if (f.n != n_ || f.m != m_ || g.n != n_ || g.m != m_)
    throw std::invalid_argument("bracket: observable shape mismatch");
  const Eigen::MatrixXcd& ze = z.entries();
  if (ze.rows() != n_ || ze.cols() != m_)
    throw std::invalid_argument("bracket: point shape mismatch");
  return gradient(f, ze).dot(hamiltonian_field(g, ze));
}

double poisson_bracket_mat(const SmoothObservable& f, const SmoothObservable& g,
                           const MatrixPoint& z, double fd_step) {
  FlatPoissonStructure structure(z.n(), z.m(), fd_step);
  return structure.bracket(f, g, z);
}

double bracket_sign_convention_deviation(int n, int m, std::uint64_t seed) {
  FlatPoissonStructure structure(n, m);
  SplitMix64 rng(seed);
  constexpr int kPoints = 3;
  double dev = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const Eigen::MatrixXcd coeff = complex_gaussian_matrix(rng, n, m);
    const SmoothObservable f = linear_observable(coeff);
    const MatrixPoint z = random_matrix_point(rng, n, m);

    // left factor: tau_1(xi) z = xi z
    const SkewHermitian xi = random_skew_hermitian(rng, n);
    const double lhs1 =
        (coeff.adjoint() * (xi.entries() * z.entries())).trace().real();
    const double rhs1 =
        structure.bracket(f, moment1_observable(xi.entries(), m), z);
    dev = std::max(dev, std::abs(lhs1 - rhs1));

    // right factor: tau_2(eta) z = -z eta
    const SkewHermitian eta = random_skew_hermitian(rng, m);
    const double lhs2 =
        -(coeff.adjoint() * (z.entries() * eta.entries())).trace().real();
    const double rhs2 =
        structure.bracket(f, moment2_observable(eta.entries(), n), z);
    dev = std::max(dev, std::abs(lhs2 - rhs2));
  }
  return dev;
}

void check_bracket_sign_convention(int n, int m, std::uint64_t seed) {
  if (bracket_sign_convention_deviation(n, m, seed) > 1e-6)
    throw std::logic_error(
        "bracket sign convention violated: xi^M(f) != {f, Phi^xi}");
}

}  // namespace howelab
