#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mforge/linalg.hpp"

namespace mforge {

/// Bijection of {1..n}, stored 0-based. Products compose left to right:
/// (a*b) means "apply a, then b", so a relation like s*a*f == identity reads
/// in the same order it is usually written.
class Permutation {
public:
  explicit Permutation(int degree);
  static Permutation from_images(const std::vector<int>& one_based);
  // Cycle notation, 1-based: "(1,5)(2,8)(4,7)"; "()" is the identity.
  static Permutation from_cycles(std::string_view cycles, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  int fixed_points() const;
  // Cycle lengths including fixed points, weakly decreasing.
  std::vector<int> cycle_type() const;
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

private:
  std::vector<int> img_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Assignment of labels 1..10 to the edges of the complete graph K5.
class EdgeLabeling {
public:
  // Label i+1 -> 0-based vertex pair.
  explicit EdgeLabeling(std::array<std::pair<int, int>, 10> edges);
  // Labels 1-5 walk the pentagon sides cyclically, labels 6-10 the
  // pentagram sides.
  static const EdgeLabeling& pentagon_pentagram();

  std::pair<int, int> edge(int label0) const { return edges_[static_cast<std::size_t>(label0)]; }
  int label_of(int u, int v) const; // 0-based vertices -> 0-based label

private:
  std::array<std::pair<int, int>, 10> edges_;
  std::array<std::array<int, 5>, 5> lookup_;
};

// Permutation induced on edge labels by a vertex permutation of degree 5.
Permutation edge_action(const Permutation& vertex_perm, const EdgeLabeling& lab);

// Exact group order via a stabilizer chain (Schreier-Sims).
std::uint64_t group_order(const std::vector<Permutation>& generators);

bool is_transitive(const std::vector<Permutation>& generators);

// All minimal nontrivial block systems (one per seed pair that yields one),
// deduplicated; blocks and points are 0-based and sorted. An empty result
// for a transitive group means the action is primitive.
std::vector<std::vector<std::vector<int>>> find_blocks(
    const std::vector<Permutation>& generators);

bool is_primitive(const std::vector<Permutation>& generators);

// Coordinate action on vectors: entry i moves to position g(i).
VectorF permuted(const Permutation& g, const VectorF& v);

Eigen::Index span_rank(const std::vector<VectorF>& vectors);

// True iff the span of the given vectors is carried into itself by every
// generator (exact rank test).
bool invariant_subspace_check(const std::vector<Permutation>& generators,
                              const std::vector<VectorF>& spanning);

// Indicator vectors of the five fans (edges incident to one vertex).
std::vector<VectorF> fan_vectors(const EdgeLabeling& lab);

// All 12 signed Hamiltonian-cycle vectors (+1 on the cycle, -1 on its
// complementary cycle); closed under negation.
std::vector<VectorF> hamiltonian_cycle_vectors(const EdgeLabeling& lab);

} // namespace mforge
