#include "mforge/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <unordered_map>

#include "mforge/error.hpp"

namespace mforge {

Permutation::Permutation(int degree) : img_(static_cast<std::size_t>(degree)) {
  if (degree < 1) throw UsageError("permutation degree must be positive");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& one_based) {
  Permutation p(static_cast<int>(one_based.size()));
  std::vector<bool> seen(one_based.size(), false);
  for (std::size_t i = 0; i < one_based.size(); ++i) {
    int v = one_based[i] - 1;
    if (v < 0 || v >= static_cast<int>(one_based.size()) ||
        seen[static_cast<std::size_t>(v)])
      throw UsageError("image list is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
    p.img_[i] = v;
  }
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, int degree) {
  Permutation p(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == start) throw ParseError("expected point in cycle notation");
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1 || v > degree) throw ParseError("cycle point out of range");
      if (used[static_cast<std::size_t>(v - 1)])
        throw ParseError("point repeated in cycle notation");
      used[static_cast<std::size_t>(v - 1)] = true;
      cyc.push_back(v - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos == text.size()) throw ParseError("unterminated cycle");
    ++pos; // ')'
    for (std::size_t i = 0; i < cyc.size(); ++i)
      p.img_[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (int i = 0; i < degree(); ++i)
    p.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

int Permutation::fixed_points() const {
  int n = 0;
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] == i) ++n;
  return n;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lengths;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      j = apply(j);
      ++len;
    } while (j != i);
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(img_.size(), false);
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || apply(i) == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = apply(j);
    } while (j != i);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw UsageError("composing permutations of different degree");
  Permutation p(a.degree());
  for (int i = 0; i < a.degree(); ++i)
    p.img_[static_cast<std::size_t>(i)] = b.apply(a.apply(i));
  return p;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.cycle_string();
}

EdgeLabeling::EdgeLabeling(std::array<std::pair<int, int>, 10> edges)
    : edges_(edges) {
  for (auto& row : lookup_) row.fill(-1);
  for (int lab = 0; lab < 10; ++lab) {
    auto [u, v] = edges_[static_cast<std::size_t>(lab)];
    if (u < 0 || u > 4 || v < 0 || v > 4 || u == v)
      throw UsageError("edge labeling entry is not a K5 edge");
    if (lookup_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != -1)
      throw UsageError("edge labeling repeats an edge");
    lookup_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = lab;
    lookup_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = lab;
  }
}

const EdgeLabeling& EdgeLabeling::pentagon_pentagram() {
  // Pentagon sides 1..5: {1,2},{2,3},{3,4},{4,5},{5,1}; pentagram sides
  // 6..10: {1,3},{2,4},{3,5},{4,1},{5,2} (1-based vertices).
  static const EdgeLabeling lab(std::array<std::pair<int, int>, 10>{{
      {0, 1},
      {1, 2},
      {2, 3},
      {3, 4},
      {4, 0},
      {0, 2},
      {1, 3},
      {2, 4},
      {3, 0},
      {4, 1},
  }});
  return lab;
}

int EdgeLabeling::label_of(int u, int v) const {
  int lab = lookup_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  if (lab < 0) throw UsageError("not an edge");
  return lab;
}

Permutation edge_action(const Permutation& vertex_perm, const EdgeLabeling& lab) {
  if (vertex_perm.degree() != 5)
    throw UsageError("edge action expects a degree-5 permutation");
  std::vector<int> images(10);
  for (int l = 0; l < 10; ++l) {
    auto [u, v] = lab.edge(l);
    images[static_cast<std::size_t>(l)] =
        lab.label_of(vertex_perm.apply(u), vertex_perm.apply(v)) + 1;
  }
  return Permutation::from_images(images);
}

namespace {

int common_degree(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw UsageError("empty generator list");
  int n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw UsageError("generators of mixed degree");
  return n;
}

// Stabilizer chain (Schreier-Sims). An element stored at level k fixes the
// base points of all earlier levels, so the group stabilizing the first k
// base points is generated by everything stored at levels >= k. Each level
// keeps a transversal u_p with u_p(beta) = p.
struct StabilizerChain {
  int degree;
  std::vector<int> base;
  std::vector<std::vector<Permutation>> stored;
  std::vector<std::unordered_map<int, Permutation>> transversal;

  explicit StabilizerChain(int n) : degree(n) {}

  std::size_t levels() const { return base.size(); }

  void rebuild_orbit(std::size_t k) {
    auto& trans = transversal[k];
    trans.clear();
    trans.emplace(base[k], Permutation(degree));
    std::vector<int> frontier{base[k]};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int p : frontier) {
        const Permutation up = trans.at(p);
        for (std::size_t j = k; j < stored.size(); ++j)
          for (const auto& s : stored[j]) {
            int r = s.apply(p);
            if (!trans.contains(r)) {
              trans.emplace(r, up * s);
              next.push_back(r);
            }
          }
      }
      frontier = std::move(next);
    }
  }

  void rebuild_all_orbits() {
    for (std::size_t k = 0; k < levels(); ++k) rebuild_orbit(k);
  }

  // Strips g through the chain; installs a non-trivial residue at the level
  // where stripping gets stuck. Returns true if something was installed.
  bool sift_install(Permutation g) {
    for (std::size_t k = 0;; ++k) {
      if (g.is_identity()) return false;
      if (k == levels()) {
        int beta = 0;
        for (int i = 0; i < degree; ++i)
          if (g.apply(i) != i) {
            beta = i;
            break;
          }
        base.push_back(beta);
        stored.emplace_back();
        transversal.emplace_back();
        rebuild_orbit(k);
      }
      int p = g.apply(base[k]);
      if (p == base[k]) continue;
      auto it = transversal[k].find(p);
      if (it != transversal[k].end()) {
        g = g * it->second.inverse();
        continue;
      }
      stored[k].push_back(std::move(g));
      rebuild_all_orbits();
      return true;
    }
  }

  // One verification pass: every Schreier generator of every level must
  // strip to the identity. Returns true if the pass installed anything.
  bool verify_pass() {
    bool changed = false;
    for (std::size_t k = 0; k < levels(); ++k) {
      std::vector<int> orbit;
      orbit.reserve(transversal[k].size());
      for (const auto& [q, u] : transversal[k]) orbit.push_back(q);
      for (int q : orbit)
        for (std::size_t j = k; j < stored.size(); ++j)
          for (std::size_t s = 0; s < stored[j].size(); ++s) {
            const Permutation& gen = stored[j][s];
            Permutation schreier = transversal[k].at(q) * gen *
                                   transversal[k].at(gen.apply(q)).inverse();
            if (sift_install(std::move(schreier))) changed = true;
          }
    }
    return changed;
  }

  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (const auto& trans : transversal) result *= trans.size();
    return result;
  }
};

} // namespace

std::uint64_t group_order(const std::vector<Permutation>& generators) {
  int n = common_degree(generators);
  StabilizerChain chain(n);
  for (const auto& g : generators) chain.sift_install(g);
  while (chain.verify_pass()) {
  }
  return chain.order();
}

bool is_transitive(const std::vector<Permutation>& generators) {
  int n = common_degree(generators);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const auto& g : generators) {
      int q = g.apply(p);
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = true;
        ++count;
        stack.push_back(q);
      }
    }
  }
  return count == n;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

} // namespace

std::vector<std::vector<std::vector<int>>> find_blocks(
    const std::vector<Permutation>& generators) {
  int n = common_degree(generators);
  std::set<std::vector<std::vector<int>>> systems;
  for (int x = 1; x < n; ++x) {
    // Minimal block system in which 0 and x share a block.
    UnionFind uf(n);
    uf.unite(0, x);
    std::vector<std::pair<int, int>> queue{{0, x}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (const auto& g : generators) {
        int ga = g.apply(a), gb = g.apply(b);
        if (uf.unite(ga, gb)) queue.emplace_back(ga, gb);
      }
    }
    std::map<int, std::vector<int>> classes;
    for (int p = 0; p < n; ++p) classes[uf.find(p)].push_back(p);
    std::size_t block = classes.begin()->second.size();
    if (block <= 1 || block >= static_cast<std::size_t>(n)) continue;
    std::vector<std::vector<int>> system;
    for (auto& [root, pts] : classes) system.push_back(pts);
    systems.insert(system);
  }
  return {systems.begin(), systems.end()};
}

bool is_primitive(const std::vector<Permutation>& generators) {
  return is_transitive(generators) && find_blocks(generators).empty();
}

VectorF permuted(const Permutation& g, const VectorF& v) {
  if (g.degree() != v.size()) throw UsageError("permutation/vector size mismatch");
  VectorF out(v.size());
  for (int i = 0; i < g.degree(); ++i) out(g.apply(i)) = v(i);
  return out;
}

Eigen::Index span_rank(const std::vector<VectorF>& vectors) {
  if (vectors.empty()) return 0;
  MatrixF m(static_cast<Eigen::Index>(vectors.size()), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  return row_rank(std::move(m));
}

bool invariant_subspace_check(const std::vector<Permutation>& generators,
                              const std::vector<VectorF>& spanning) {
  if (spanning.empty()) return true;
  MatrixF m(static_cast<Eigen::Index>(spanning.size()), spanning.front().size());
  for (std::size_t i = 0; i < spanning.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = spanning[i].transpose();
  auto pivots = rref_in_place(m);
  for (const auto& g : generators)
    for (const auto& v : spanning)
      if (!is_zero_vector(reduce_against(m, pivots, permuted(g, v)))) return false;
  return true;
}

std::vector<VectorF> fan_vectors(const EdgeLabeling& lab) {
  std::vector<VectorF> fans;
  for (int vertex = 0; vertex < 5; ++vertex) {
    VectorF v(10);
    for (int l = 0; l < 10; ++l) {
      auto [a, b] = lab.edge(l);
      v(l) = FieldElem(a == vertex || b == vertex ? 1 : 0);
    }
    fans.push_back(std::move(v));
  }
  return fans;
}

std::vector<VectorF> hamiltonian_cycle_vectors(const EdgeLabeling& lab) {
  // Visiting orders 0 -> p1 -> p2 -> p3 -> p4 -> 0; a cycle and its reverse
  // give the same vector, a cycle and its complement give opposite signs.
  std::vector<int> order{1, 2, 3, 4};
  std::set<std::vector<std::string>> seen;
  std::vector<VectorF> out;
  do {
    VectorF v(10);
    for (int l = 0; l < 10; ++l) v(l) = FieldElem(-1);
    int prev = 0;
    for (int vertex : order) {
      v(lab.label_of(prev, vertex)) = FieldElem(1);
      prev = vertex;
    }
    v(lab.label_of(prev, 0)) = FieldElem(1);
    std::vector<std::string> key;
    for (int l = 0; l < 10; ++l) key.push_back(v(l).str());
    if (seen.insert(key).second) out.push_back(std::move(v));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

} // namespace mforge
