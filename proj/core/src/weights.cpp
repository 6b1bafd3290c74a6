#include "howelab/weights.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace howelab {

DominantWeight::DominantWeight(std::vector<long long> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("DominantWeight: rank must be positive");
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1] < entries_[i])
      throw std::invalid_argument(
          "DominantWeight: entries must be weakly decreasing");
  }
}

std::string DominantWeight::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ",";
    out << entries_[i];
  }
  out << "]";
  return out.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument(
          "Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

DominantWeight Partition::to_weight(int rank) const {
  if (length() > rank)
    throw std::invalid_argument("Partition::to_weight: more parts than rank");
  std::vector<long long> entries(static_cast<std::size_t>(rank), 0);
  for (int i = 0; i < length(); ++i) entries[i] = parts_[i];
  return DominantWeight(std::move(entries));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

BigInt weyl_dimension(const DominantWeight& weight) {
  const auto& l = weight.entries();
  const int n = weight.rank();
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= BigInt(l[i] - l[j] + (j - i));
      den *= j - i;
    }
  }
  if (num % den != 0)
    throw std::logic_error("weyl_dimension: non-integral quotient");
  return num / den;
}

DominantWeight dual_weight(const DominantWeight& weight) {
  std::vector<long long> entries(weight.entries().rbegin(),
                                 weight.entries().rend());
  for (auto& e : entries) e = -e;
  return DominantWeight(std::move(entries));
}

namespace {

void collect_partitions(int remaining, int max_part, int parts_left,
                        std::vector<int>& current,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    collect_partitions(remaining - p, p, parts_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int max_parts) {
  if (weight < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> current;
  collect_partitions(weight, weight, max_parts, current, out);
  return out;
}

}  // namespace howelab
