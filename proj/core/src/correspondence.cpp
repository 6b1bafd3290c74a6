#include "howelab/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace howelab {

SigmaVector::SigmaVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty())
    throw std::invalid_argument("SigmaVector: needs at least one value");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0))
      throw std::invalid_argument("SigmaVector: values must be >= 0");
    if (i > 0 && values_[i - 1] < values_[i])
      throw std::invalid_argument("SigmaVector: values must be weakly decreasing");
  }
}

std::vector<double> SigmaVector::half_squares() const {
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    out[i] = 0.5 * values_[i] * values_[i];
  return out;
}

int SigmaVector::positive_count(double tol) const {
  int r = 0;
  for (double v : values_) {
    if (v > tol) ++r;
  }
  return r;
}

std::string SigmaVector::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out << ",";
    out << values_[i];
  }
  out << ")";
  return out.str();
}

std::string to_string(CorrespondenceModel model) {
  switch (model) {
    case CorrespondenceModel::matrix:
      return "matrix";
    case CorrespondenceModel::cotangent:
      return "cotangent";
    case CorrespondenceModel::projective:
      return "projective";
  }
  return "unknown";
}

SigmaVector svd_sigma(const MatrixPoint& z) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(z.entries());
  const Eigen::VectorXd sv = svd.singularValues();
  return SigmaVector(std::vector<double>(sv.data(), sv.data() + sv.size()));
}

CorrespondencePair lambda_matrix(const SigmaVector& sigma, int n) {
  const int m = sigma.m();
  if (n < m) throw std::invalid_argument("lambda_matrix: requires n >= m");
  const std::vector<double> hs = sigma.half_squares();
  std::vector<double> source(static_cast<std::size_t>(n), 0.0);
  std::copy(hs.begin(), hs.end(), source.begin());
  std::vector<double> target(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) target[i] = -hs[i];
  return {CoadjointOrbitLabel(std::move(source)),
          CoadjointOrbitLabel(std::move(target)),
          CorrespondenceModel::matrix};
}

CorrespondencePair lambda_cotangent(const CoadjointOrbitLabel& alpha) {
  std::vector<double> negated(alpha.spectrum());
  for (double& v : negated) v = -v;
  return {alpha, CoadjointOrbitLabel(std::move(negated)),
          CorrespondenceModel::cotangent};
}

CorrespondencePair lambda_projective(double x, int level, int n) {
  if (level < 1)
    throw std::invalid_argument("lambda_projective: level must be positive");
  if (n < 1) throw std::invalid_argument("lambda_projective: n must be positive");
  constexpr double kSlack = 1e-12;
  if (x < -static_cast<double>(level) - kSlack || x > kSlack)
    throw std::invalid_argument("lambda_projective: x outside [-k, 0]");
  const double clamped = std::min(0.0, std::max(x, -static_cast<double>(level)));
  std::vector<double> target(static_cast<std::size_t>(n), 0.0);
  target[0] = clamped + level;
  return {CoadjointOrbitLabel({clamped}), CoadjointOrbitLabel(std::move(target)),
          CorrespondenceModel::projective};
}

CheckResult verify_spectral_correspondence(const MatrixPoint& z, double tol) {
  const SigmaVector sigma = svd_sigma(z);
  const std::vector<double> hs = sigma.half_squares();
  const int n = z.n();
  const int m = z.m();

  std::vector<double> expected1(static_cast<std::size_t>(n), 0.0);
  std::copy(hs.begin(), hs.end(), expected1.begin());
  std::vector<double> expected2(hs.rbegin(), hs.rend());
  for (double& v : expected2) v = -v;

  const std::vector<double> spec1 = moment1_mat(z).spectrum();
  const std::vector<double> spec2 = moment2_mat(z).spectrum();

  double max_dev = 0.0;
  for (int i = 0; i < n; ++i)
    max_dev = std::max(max_dev, std::abs(spec1[i] - expected1[i]));
  for (int i = 0; i < m; ++i)
    max_dev = std::max(max_dev, std::abs(spec2[i] - expected2[i]));

  std::ostringstream detail;
  detail << "sigma=" << sigma.to_string();
  return CheckResult::numeric("spectral-correspondence", max_dev, tol,
                              detail.str());
}

namespace {

/// Squared multiplicities of distinct positive sigma values (runs within tol).
int positive_multiplicity_square_sum(const SigmaVector& sigma,
                                     double tol = 1e-9) {
  const auto& v = sigma.values();
  int sum = 0;
  std::size_t i = 0;
  while (i < v.size() && v[i] > tol) {
    std::size_t j = i;
    while (j < v.size() && std::abs(v[j] - v[i]) <= tol) ++j;
    const int mult = static_cast<int>(j - i);
    sum += mult * mult;
    i = j;
  }
  return sum;
}

}  // namespace

int reduced_space_dimension(const SigmaVector& sigma, int n) {
  const int m = sigma.m();
  if (n < m)
    throw std::invalid_argument("reduced_space_dimension: requires n >= m");
  const int r = sigma.positive_count();
  const int orbit_dim_g2 = m * m - (m - r) * (m - r);
  return orbit_dim_g2 - positive_multiplicity_square_sum(sigma);
}

CheckResult reduced_space_dimension_check(const SigmaVector& sigma, int n) {
  const CorrespondencePair pair = lambda_matrix(sigma, n);
  const int dim_reduced = reduced_space_dimension(sigma, n);
  const int dim_orbit = orbit_dimension(pair.target);
  std::ostringstream detail;
  detail << "sigma=" << sigma.to_string() << " n=" << n
         << " dim_reduced=" << dim_reduced << " dim_orbit=" << dim_orbit;
  return CheckResult::exact_check("reduced-space-dimension",
                                  dim_reduced == dim_orbit,
                                  std::abs(dim_reduced - dim_orbit),
                                  detail.str());
}

bool integrality_preserved(const CorrespondencePair& pair) {
  return is_integral(pair.source) == is_integral(pair.target);
}

int level_set_dimension_via_orbits(const SigmaVector& sigma, int n) {
  const int m = sigma.m();
  if (n < m) throw std::invalid_argument("level_set_dimension: requires n >= m");
  const int r = sigma.positive_count();
  const CorrespondencePair pair = lambda_matrix(sigma, n);
  return orbit_dimension(pair.source) + (m * m - (m - r) * (m - r));
}

int level_set_dimension_via_stabilizers(const SigmaVector& sigma, int n) {
  const int m = sigma.m();
  if (n < m) throw std::invalid_argument("level_set_dimension: requires n >= m");
  const int r = sigma.positive_count();
  const int joint_stabilizer = positive_multiplicity_square_sum(sigma) +
                               (n - r) * (n - r) + (m - r) * (m - r);
  return n * n + m * m - joint_stabilizer;
}

bool joint_preimage_nonempty(const CoadjointOrbitLabel& source,
                             const CoadjointOrbitLabel& target, double tol) {
  const int n = source.rank();
  const int m = target.rank();
  if (n < m) return false;
  const auto& s = source.spectrum();
  const auto& t = target.spectrum();
  for (double v : s)
    if (v < -tol) return false;
  for (double v : t)
    if (v > tol) return false;
  // the n - m smallest source entries must vanish
  for (int i = m; i < n; ++i)
    if (std::abs(s[i]) > tol) return false;
  // source (descending) must be the negated reverse of target (descending)
  for (int i = 0; i < m; ++i)
    if (std::abs(s[i] + t[m - 1 - i]) > tol) return false;
  return true;
}

namespace {

void weakly_decreasing_tuples(const std::vector<double>& values_desc, int m,
                              std::size_t start, std::vector<double>& current,
                              std::vector<SigmaVector>& out) {
  if (static_cast<int>(current.size()) == m) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = start; i < values_desc.size(); ++i) {
    current.push_back(values_desc[i]);
    weakly_decreasing_tuples(values_desc, m, i, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<SigmaVector> auto_sigma_grid(int m) {
  if (m < 1) throw std::invalid_argument("auto_sigma_grid: m must be positive");
  std::vector<double> half_squares = {3.0, 2.5, 2.0, 1.5, 1.0, 0.5, 0.0};
  std::vector<double> sigmas(half_squares.size());
  for (std::size_t i = 0; i < half_squares.size(); ++i)
    sigmas[i] = std::sqrt(2.0 * half_squares[i]);
  std::vector<SigmaVector> out;
  std::vector<double> current;
  weakly_decreasing_tuples(sigmas, m, 0, current, out);
  return out;
}

std::vector<SigmaVector> multiplicity_pattern_grid(int m) {
  if (m < 1)
    throw std::invalid_argument("multiplicity_pattern_grid: m must be positive");
  const std::vector<double> values = {3.0, 2.5, 2.0, 1.0, 0.0};
  std::vector<SigmaVector> out;
  std::vector<double> current;
  weakly_decreasing_tuples(values, m, 0, current, out);
  return out;
}

}  // namespace howelab
