#pragma once

#include <string>
#include <vector>

#include "howelab/bigint.hpp"

namespace howelab {

/// Weakly decreasing integer vector indexing an irreducible U(N)
/// representation by its highest weight.
class DominantWeight {
 public:
  explicit DominantWeight(std::vector<long long> entries);

  int rank() const { return static_cast<int>(entries_.size()); }
  const std::vector<long long>& entries() const { return entries_; }

  bool operator==(const DominantWeight& other) const = default;

  std::string to_string() const;

 private:
  std::vector<long long> entries_;
};

/// Weakly decreasing list of strictly positive parts; indexes Schur
/// functors.  The empty partition is allowed (weight 0).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  const std::vector<int>& parts() const { return parts_; }

  /// Highest weight of S_lambda(C^rank): parts padded with zeros.
  /// Throws if the partition has more parts than the rank.
  DominantWeight to_weight(int rank) const;

  bool operator==(const Partition& other) const = default;

  std::string to_string() const;  // "(2,1)", "()" for empty

 private:
  std::vector<int> parts_;
};

/// Dimension of the irreducible U(N) representation with the given highest
/// weight, computed exactly as prod_{i<j} (l_i - l_j + j - i) / (j - i)
/// with separate numerator/denominator products and exact division.
BigInt weyl_dimension(const DominantWeight& weight);

/// Highest weight of the dual representation: entries negated and reversed.
DominantWeight dual_weight(const DominantWeight& weight);

/// All partitions of `weight` with at most `max_parts` parts, first part
/// descending (deterministic order).  weight == 0 yields the empty partition.
std::vector<Partition> partitions_of(int weight, int max_parts);

}  // namespace howelab
