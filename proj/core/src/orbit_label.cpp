#include "howelab/orbit_label.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace howelab {

CoadjointOrbitLabel::CoadjointOrbitLabel(std::vector<double> spectrum)
    : spectrum_(std::move(spectrum)) {
  if (spectrum_.empty())
    throw std::invalid_argument("CoadjointOrbitLabel: rank must be positive");
  for (double v : spectrum_) {
    if (!std::isfinite(v))
      throw std::invalid_argument("CoadjointOrbitLabel: non-finite entry");
  }
  std::sort(spectrum_.begin(), spectrum_.end(), std::greater<>());
}

CoadjointOrbitLabel::CoadjointOrbitLabel(const DominantWeight& weight)
    : CoadjointOrbitLabel(std::vector<double>(weight.entries().begin(),
                                              weight.entries().end())) {}

std::string CoadjointOrbitLabel::group() const {
  return "U(" + std::to_string(rank()) + ")";
}

bool CoadjointOrbitLabel::approx_equal(const CoadjointOrbitLabel& other,
                                       double tol) const {
  if (rank() != other.rank()) return false;
  for (int i = 0; i < rank(); ++i) {
    if (std::abs(spectrum_[i] - other.spectrum_[i]) > tol) return false;
  }
  return true;
}

std::string CoadjointOrbitLabel::to_string() const {
  std::ostringstream out;
  out << group() << " [";
  for (int i = 0; i < rank(); ++i) {
    if (i) out << ",";
    out << spectrum_[i];
  }
  out << "]";
  return out.str();
}

bool is_integral(const CoadjointOrbitLabel& label, double tol) {
  for (double v : label.spectrum()) {
    if (std::abs(v - std::round(v)) > tol) return false;
  }
  return true;
}

int orbit_dimension(const CoadjointOrbitLabel& label, double tol) {
  const auto& spec = label.spectrum();
  const int n = label.rank();
  int dim = n * n;
  // spectrum is sorted, so multiplicity groups are runs; each run is
  // anchored at its first element
  int i = 0;
  while (i < n) {
    int j = i;
    while (j < n && std::abs(spec[j] - spec[i]) <= tol) ++j;
    const int mult = j - i;
    dim -= mult * mult;
    i = j;
  }
  return dim;
}

}  // namespace howelab
