#include "howelab/quantization.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace howelab {

BigInt schur_dimension(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("schur_dimension: n must be positive");
  if (lambda.length() > n) return 0;
  return weyl_dimension(lambda.to_weight(n));
}

bool DecompositionTable::multiplicity_free() const {
  for (const auto& row : rows) {
    if (row.multiplicity != 0 && row.multiplicity != 1) return false;
  }
  return true;
}

bool DecompositionTable::pairing_injective() const {
  std::set<std::vector<long long>> sources;
  std::set<std::vector<long long>> targets;
  for (const auto& row : rows) {
    if (!sources.insert(row.source.entries()).second) return false;
    if (!targets.insert(row.target.entries()).second) return false;
  }
  return true;
}

DecompositionTable gl_duality_check(int n, int m, int k) {
  if (m < 1 || n < m)
    throw std::invalid_argument("gl_duality_check: requires n >= m >= 1");
  if (k < 0) throw std::invalid_argument("gl_duality_check: negative degree");

  DecompositionTable table;
  table.model = CorrespondenceModel::matrix;
  table.degree = k;
  table.lhs = binomial(static_cast<long long>(n) * m + k - 1, k);
  table.rhs = 0;

  for (const Partition& lambda : partitions_of(k, m)) {
    DecompositionRow row{lambda.to_string(),
                         lambda.to_weight(n),
                         dual_weight(lambda.to_weight(m)),
                         1,
                         schur_dimension(lambda, n),
                         schur_dimension(lambda, m)};
    table.rhs += row.multiplicity * row.dim_source * row.dim_target;
    table.rows.push_back(std::move(row));
  }
  return table;
}

DecompositionTable projective_decomposition_check(int n, int k) {
  if (n < 1 || k < 0)
    throw std::invalid_argument("projective_decomposition_check: bad arguments");

  DecompositionTable table;
  table.model = CorrespondenceModel::projective;
  table.degree = k;
  table.lhs = binomial(k + n, n);
  table.rhs = 0;

  for (int d = 0; d <= k; ++d) {
    std::vector<long long> target_entries(static_cast<std::size_t>(n), 0);
    target_entries[0] = k - d;
    DecompositionRow row{"d=" + std::to_string(d),
                         DominantWeight({-static_cast<long long>(d)}),
                         DominantWeight(std::move(target_entries)),
                         1,
                         1,
                         binomial(k - d + n - 1, n - 1)};
    table.rhs += row.multiplicity * row.dim_source * row.dim_target;
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

/// Every table row must reproduce the orbit-correspondence label pair at
/// sigma_i = sqrt(2 lambda_i).
void cross_check_against_lambda(const DecompositionTable& table, int n, int m) {
  constexpr double kTol = 1e-9;
  for (const auto& row : table.rows) {
    std::vector<double> sigma(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i)
      sigma[i] = std::sqrt(2.0 * static_cast<double>(row.source.entries()[i]));
    const CorrespondencePair pair = lambda_matrix(SigmaVector(sigma), n);
    const CoadjointOrbitLabel source_weight_label(row.source);
    const CoadjointOrbitLabel target_weight_label(row.target);
    if (!pair.source.approx_equal(source_weight_label, kTol) ||
        !pair.target.approx_equal(target_weight_label, kTol))
      throw std::logic_error(
          "matrix_quantization_table: weight pair disagrees with the orbit "
          "correspondence at " + row.label);
  }
}

}  // namespace

std::vector<DecompositionTable> matrix_quantization_table(int n, int m,
                                                          int k_max) {
  if (k_max < 0)
    throw std::invalid_argument("matrix_quantization_table: negative k_max");
  std::vector<DecompositionTable> tables;
  tables.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    DecompositionTable table = gl_duality_check(n, m, k);
    cross_check_against_lambda(table, n, m);
    tables.push_back(std::move(table));
  }
  return tables;
}

int multiplicity_query(const DominantWeight& source,
                       const DecompositionTable& table) {
  for (const auto& row : table.rows) {
    if (row.source == source) return row.multiplicity;
  }
  return 0;
}

std::string tables_to_csv(const std::vector<DecompositionTable>& tables) {
  std::ostringstream out;
  out << "model,degree,row,source_weight,target_weight,multiplicity,"
         "dim_source,dim_target\n";
  for (const auto& table : tables) {
    for (const auto& row : table.rows) {
      out << to_string(table.model) << "," << table.degree << ",\"" << row.label
          << "\",\"" << row.source.to_string() << "\",\""
          << row.target.to_string() << "\"," << row.multiplicity << ","
          << row.dim_source << "," << row.dim_target << "\n";
    }
    out << to_string(table.model) << "," << table.degree << ",TOTAL,,,,"
        << table.lhs << "," << table.rhs << "\n";
  }
  return out.str();
}

}  // namespace howelab
