#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <numeric>
#include <string>
#include <vector>

#include "mforge/error.hpp"

namespace mforge {

/// Weakly decreasing list of positive integers; the empty partition is the
/// partition of 0.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  std::string str() const; // e.g. "6,3,1"; "" for the empty partition

private:
  std::vector<int> parts_;
};

// All partitions of n in descending lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);

std::ostream& operator<<(std::ostream& os, const Partition& p);

} // namespace mforge
