#pragma once

#include <Eigen/Dense>

#include "howelab/matrix_model.hpp"
#include "howelab/projective_model.hpp"
#include "howelab/rng.hpp"

namespace howelab {

/// Matrix with independent complex-gaussian entries, filled row-major.
Eigen::MatrixXcd complex_gaussian_matrix(SplitMix64& rng, int rows, int cols);

/// Haar-distributed unitary: QR of a complex gaussian matrix with the
/// diagonal of R phase-corrected.
Eigen::MatrixXcd haar_unitary(SplitMix64& rng, int size);

MatrixPoint random_matrix_point(SplitMix64& rng, int n, int m);

/// Skew-hermitian with entries of order one: (G - G^dagger)/2 for a complex
/// gaussian G.
SkewHermitian random_skew_hermitian(SplitMix64& rng, int size);

ProjectivePoint random_projective_point(SplitMix64& rng, int n, int level);

}  // namespace howelab
