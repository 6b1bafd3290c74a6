#pragma once

#include <string>
#include <vector>

#include "howelab/bigint.hpp"
#include "howelab/correspondence.hpp"
#include "howelab/weights.hpp"

namespace howelab {

/// Dimension of the Schur functor S_lambda(C^n); 0 when lambda has more
/// than n parts.
BigInt schur_dimension(const Partition& lambda, int n);

struct DecompositionRow {
  std::string label;  // "(2,1)" for matrix rows, "d=2" for projective rows
  DominantWeight source;
  DominantWeight target;
  int multiplicity = 1;
  BigInt dim_source;
  BigInt dim_target;
};

/// One graded piece of a quantized decomposition: the paired irreducible
/// constituents at a fixed degree, with the exact dimension totals of both
/// sides of the identity.
struct DecompositionTable {
  CorrespondenceModel model = CorrespondenceModel::matrix;
  int degree = 0;
  std::vector<DecompositionRow> rows;
  BigInt lhs;  // independent binomial oracle
  BigInt rhs;  // sum over rows of multiplicity * dim_source * dim_target

  bool passes() const { return lhs == rhs; }
  bool multiplicity_free() const;
  bool pairing_injective() const;
};

/// Degree-k piece of the GL(n)-GL(m) duality on polynomials on
/// Mat(n x m; C):  dim Sym^k(C^n (x) C^m) = sum over lambda |- k with at
/// most m parts of dim S_lambda(C^n) * dim S_lambda(C^m).  The left side
/// comes from the independent oracle binomial(nm + k - 1, k); rows pair
/// [lambda, 0...] with the dual weight of [lambda].
DecompositionTable gl_duality_check(int n, int m, int k);

/// Degree decomposition of the homogeneous polynomials on C^{n+1}:
/// binomial(k + n, n) = sum_{d=0}^{k} binomial(k - d + n - 1, n - 1),
/// rows pairing the U(1) weight [-d] with the U(n) label [k-d, 0, ..., 0].
DecompositionTable projective_decomposition_check(int n, int k);

/// Per-degree duality tables for k = 0..k_max, each cross-checked against
/// lambda_matrix: the weight pair of every row must reproduce the label
/// pair of the orbit correspondence at sigma_i = sqrt(2 lambda_i).
std::vector<DecompositionTable> matrix_quantization_table(int n, int m,
                                                          int k_max);

/// 1 iff the source weight appears in the table, else 0.
int multiplicity_query(const DominantWeight& source,
                       const DecompositionTable& table);

/// CSV dump: one line per row plus a TOTAL line per table.
std::string tables_to_csv(const std::vector<DecompositionTable>& tables);

}  // namespace howelab
