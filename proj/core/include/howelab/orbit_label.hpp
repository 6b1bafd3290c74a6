#pragma once

#include <string>
#include <vector>

#include "howelab/weights.hpp"

namespace howelab {

/// Label [l_1, ..., l_N] for the U(N) coadjoint orbit through the diagonal
/// element with entries i*(l_1, ..., l_N).  Labels are Weyl-group classes:
/// the spectrum is canonicalized to weakly decreasing order on construction.
///
/// Only unitary groups are supported; the group tag is U(rank).
class CoadjointOrbitLabel {
 public:
  explicit CoadjointOrbitLabel(std::vector<double> spectrum);
  explicit CoadjointOrbitLabel(const DominantWeight& weight);

  int rank() const { return static_cast<int>(spectrum_.size()); }
  std::string group() const;  // "U(N)"
  const std::vector<double>& spectrum() const { return spectrum_; }

  bool approx_equal(const CoadjointOrbitLabel& other,
                    double tol = 1e-9) const;

  std::string to_string() const;

 private:
  std::vector<double> spectrum_;
};

/// True iff the orbit label lies on the integer lattice (every spectrum
/// entry within `tol` of an integer).  For U(N) this is equivalent to the
/// existence of a stabilizer character with the right differential.
bool is_integral(const CoadjointOrbitLabel& label, double tol = 1e-9);

/// Real dimension of the orbit: N^2 - sum of squared multiplicities of the
/// distinct spectrum values (grouped within `tol`).  Always even.
int orbit_dimension(const CoadjointOrbitLabel& label, double tol = 1e-9);

}  // namespace howelab
