#pragma once

#include <string>
#include <vector>

#include "howelab/cotangent_model.hpp"
#include "howelab/matrix_model.hpp"
#include "howelab/orbit_label.hpp"
#include "howelab/report.hpp"

namespace howelab {

/// Singular-value vector sigma_1 >= ... >= sigma_m >= 0; parametrizes the
/// joint U(n) x U(m) orbits of the matrix model.
class SigmaVector {
 public:
  explicit SigmaVector(std::vector<double> values);

  int m() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }

  std::vector<double> half_squares() const;  // sigma_i^2 / 2

  /// Number of strictly positive values (within tol of zero counts as zero).
  int positive_count(double tol = 1e-9) const;

  std::string to_string() const;

 private:
  std::vector<double> values_;
};

enum class CorrespondenceModel { matrix, cotangent, projective };

std::string to_string(CorrespondenceModel model);

/// Source orbit, its image under the model's correspondence map, and the
/// model tag.  Built by the lambda_* functions, which maintain
/// target = Lambda(source).
struct CorrespondencePair {
  CoadjointOrbitLabel source;
  CoadjointOrbitLabel target;
  CorrespondenceModel model;
};

/// Singular values of z, descending; invariant under z |-> U z V^{-1}.
SigmaVector svd_sigma(const MatrixPoint& z);

/// Matrix model: O^{U(n)}_[s^2/2, 0...] |-> O^{U(m)}_[-s^2/2] (target
/// canonicalized to weakly decreasing order).  Requires n >= m.
CorrespondencePair lambda_matrix(const SigmaVector& sigma, int n);

/// Cotangent model: O_alpha |-> O_{-alpha}.
CorrespondencePair lambda_cotangent(const CoadjointOrbitLabel& alpha);

/// Projective model: U(1)-value x in [-k, 0] |-> U(n) orbit through
/// (x + k) phi_11, labelled [x + k, 0, ..., 0].
CorrespondencePair lambda_projective(double x, int level, int n);

/// Checks that the eigenvalue lists of moment1_mat(z)/i and moment2_mat(z)/i
/// equal {sigma_i^2/2} u {0} and {-sigma_i^2/2}, i.e. the moment images land
/// on the Lambda-paired labels of svd_sigma(z).
CheckResult verify_spectral_correspondence(const MatrixPoint& z,
                                           double tol = 1e-9);

/// dim M_{alpha_1} from stabilizer bookkeeping: [m^2 - (m-r)^2] - sum of
/// squared multiplicities of the distinct positive sigma values.
int reduced_space_dimension(const SigmaVector& sigma, int n);

/// Exact check dim M_{alpha_1} == dim Lambda(O_{alpha_1}).
CheckResult reduced_space_dimension_check(const SigmaVector& sigma, int n);

/// is_integral(source) == is_integral(target).
bool integrality_preserved(const CorrespondencePair& pair);

/// dim Phi_1^{-1}(O_{alpha_1}) = dim (G_1 x G_2).z computed two ways:
/// orbit dimension of the source plus the U(m)-orbit dimension of z, and
/// the joint stabilizer count n^2 + m^2 - sum m_i^2 - (n-r)^2 - (m-r)^2.
int level_set_dimension_via_orbits(const SigmaVector& sigma, int n);
int level_set_dimension_via_stabilizers(const SigmaVector& sigma, int n);

/// Emptiness certificate: a pair of labels bounds a nonempty joint moment
/// preimage iff the source is [v, 0...] and the target is [-v] for one and
/// the same nonnegative vector v (the nonzero eigenvalues of z z^dagger and
/// z^dagger z always agree).
bool joint_preimage_nonempty(const CoadjointOrbitLabel& source,
                             const CoadjointOrbitLabel& target,
                             double tol = 1e-9);

/// Grid of sigma vectors with sigma_i^2/2 drawn from
/// {0, 1/2, 1, 3/2, 2, 5/2, 3}: all weakly decreasing m-tuples, mixing
/// integral and non-integral half-squares.
std::vector<SigmaVector> auto_sigma_grid(int m);

/// Grid covering every multiplicity pattern: all weakly decreasing m-tuples
/// of sigma values from {3, 2.5, 2, 1, 0}, including repeats and zeros.
std::vector<SigmaVector> multiplicity_pattern_grid(int m);

}  // namespace howelab
