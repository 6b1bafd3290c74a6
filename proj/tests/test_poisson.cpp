#include <cmath>
#include <limits>

#include "doctest.h"
#include "howelab/poisson.hpp"
#include "howelab/sampling.hpp"

using namespace howelab;

namespace {

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a,
                            const Eigen::MatrixXcd& b) {
  return a * b - b * a;
}

}  // namespace

TEST_CASE("sign convention self-check") {
  CHECK(bracket_sign_convention_deviation(2, 2) < 1e-6);
  CHECK(bracket_sign_convention_deviation(3, 2) < 1e-6);
  CHECK_NOTHROW(check_bracket_sign_convention(2, 1));
}

TEST_CASE("bracket of an observable with itself vanishes") {
  SplitMix64 rng(31);
  const FlatPoissonStructure structure(3, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const SkewHermitian xi = random_skew_hermitian(rng, 3);
    const SmoothObservable f = moment1_observable(xi.entries(), 2);
    const MatrixPoint z = random_matrix_point(rng, 3, 2);
    CHECK(std::abs(structure.bracket(f, f, z)) < 1e-9);
    CHECK(std::abs(poisson_bracket_mat(f, f, z)) < 1e-9);
  }
}

TEST_CASE("moment components of the two actions Poisson-commute") {
  SplitMix64 rng(32);
  const FlatPoissonStructure structure(3, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixPoint z = random_matrix_point(rng, 3, 2);
    const SkewHermitian xi = random_skew_hermitian(rng, 3);
    const SkewHermitian eta = random_skew_hermitian(rng, 2);
    const double value =
        structure.bracket(moment1_observable(xi.entries(), 2),
                          moment2_observable(eta.entries(), 3), z);
    CHECK(std::abs(value) < 1e-6);
  }
}

TEST_CASE("same-action brackets close on the commutator, one global sign") {
  // {Phi^xi, Phi^xi'} = s * Phi^[xi,xi'] with a single sign s across points
  SplitMix64 rng(33);
  const FlatPoissonStructure structure(3, 2);
  int plus_votes = 0;
  int minus_votes = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixPoint z = random_matrix_point(rng, 3, 2);
    const SkewHermitian xi = random_skew_hermitian(rng, 3);
    const SkewHermitian xi2 = random_skew_hermitian(rng, 3);
    const Eigen::MatrixXcd comm = commutator(xi.entries(), xi2.entries());
    const double target = moment1_component(comm, z.entries());
    if (std::abs(target) < 1e-3) continue;  // uninformative sample
    const double value =
        structure.bracket(moment1_observable(xi.entries(), 2),
                          moment1_observable(xi2.entries(), 2), z);
    const double plus_residual = std::abs(value - target);
    const double minus_residual = std::abs(value + target);
    CHECK(std::min(plus_residual, minus_residual) < 1e-6);
    (plus_residual < minus_residual ? plus_votes : minus_votes) += 1;
  }
  CHECK(plus_votes + minus_votes > 10);
  CHECK((plus_votes == 0 || minus_votes == 0));

  // same consistency on the right factor
  plus_votes = minus_votes = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixPoint z = random_matrix_point(rng, 3, 2);
    const SkewHermitian eta = random_skew_hermitian(rng, 2);
    const SkewHermitian eta2 = random_skew_hermitian(rng, 2);
    const Eigen::MatrixXcd comm = commutator(eta.entries(), eta2.entries());
    const double target = moment2_component(comm, z.entries());
    if (std::abs(target) < 1e-3) continue;
    const double value =
        structure.bracket(moment2_observable(eta.entries(), 3),
                          moment2_observable(eta2.entries(), 3), z);
    const double plus_residual = std::abs(value - target);
    const double minus_residual = std::abs(value + target);
    CHECK(std::min(plus_residual, minus_residual) < 1e-6);
    (plus_residual < minus_residual ? plus_votes : minus_votes) += 1;
  }
  CHECK(plus_votes + minus_votes > 10);
  CHECK((plus_votes == 0 || minus_votes == 0));
}

TEST_CASE("numerical bracket is antisymmetric") {
  SplitMix64 rng(34);
  const FlatPoissonStructure structure(2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const SkewHermitian xi = random_skew_hermitian(rng, 2);
    const SkewHermitian eta = random_skew_hermitian(rng, 2);
    const SmoothObservable f = moment1_observable(xi.entries(), 2);
    const SmoothObservable g = moment2_observable(eta.entries(), 2);
    const MatrixPoint z = random_matrix_point(rng, 2, 2);
    CHECK(std::abs(structure.bracket(f, g, z) + structure.bracket(g, f, z)) <
          1e-8);
  }
}

TEST_CASE("real-coordinate maps invert each other and Omega is regular") {
  SplitMix64 rng(35);
  const FlatPoissonStructure structure(3, 2);
  const Eigen::MatrixXcd z = complex_gaussian_matrix(rng, 3, 2);
  CHECK((structure.from_real_coords(structure.to_real_coords(z)) - z)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  // omega(X_g, .) = dg must be solvable: Omega X = -grad has zero residual
  const Eigen::VectorXd v = Eigen::VectorXd::Random(structure.real_dimension());
  const Eigen::VectorXd x = structure.omega_matrix().partialPivLu().solve(v);
  CHECK((structure.omega_matrix() * x - v).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("non-finite observables are reported") {
  const FlatPoissonStructure structure(2, 2);
  const SmoothObservable bad{2, 2, [](const Eigen::MatrixXcd&) {
                               return std::numeric_limits<double>::quiet_NaN();
                             }};
  const SmoothObservable good = linear_observable(Eigen::MatrixXcd::Ones(2, 2));
  const MatrixPoint z = MatrixPoint::zero(2, 2);
  CHECK_THROWS_AS(structure.bracket(bad, good, z), std::runtime_error);
}

TEST_CASE("shape mismatches are rejected") {
  const FlatPoissonStructure structure(3, 2);
  const SmoothObservable wrong = linear_observable(Eigen::MatrixXcd::Ones(2, 2));
  const SmoothObservable right = linear_observable(Eigen::MatrixXcd::Ones(3, 2));
  CHECK_THROWS_AS(structure.bracket(wrong, right, MatrixPoint::zero(3, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(structure.bracket(right, right, MatrixPoint::zero(3, 3)),
                  std::invalid_argument);
}
