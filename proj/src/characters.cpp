#include "mforge/characters.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "mforge/numfield.hpp"

namespace mforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.rbegin(), parts_.rend());
  for (int p : parts_)
    if (p <= 0) throw UsageError("partition parts must be positive");
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw UsageError("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.str();
}

namespace {

// chi_lambda evaluated against the suffix of mu starting at mu_idx. Because
// prefix sums of mu are strictly increasing, |lambda| determines mu_idx, so
// lambda alone keys the memo.
long long mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu,
                 std::size_t mu_idx,
                 std::map<std::vector<int>, long long>& memo) {
  if (lambda.empty()) return 1;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  int r = mu[mu_idx];
  std::size_t m = lambda.size();
  // First-column hook lengths ("beta numbers"), strictly decreasing.
  std::vector<int> beta(m);
  for (std::size_t i = 0; i < m; ++i)
    beta[i] = lambda[i] + static_cast<int>(m - 1 - i);
  long long total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Removing a border strip of length r: replace beta[i] by beta[i]-r;
    // the strip height is the number of beta values jumped over.
    int height = 0;
    for (int b : beta)
      if (target < b && b < beta[i]) ++height;
    std::vector<int> nbeta = beta;
    nbeta[i] = target;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> nlambda;
    for (std::size_t j = 0; j < m; ++j) {
      int part = nbeta[j] - static_cast<int>(m - 1 - j);
      if (part > 0) nlambda.push_back(part);
    }
    long long sub = mn_rec(nlambda, mu, mu_idx + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(lambda, total);
  return total;
}

} // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n())
    throw UsageError("character of mismatched partition sizes");
  std::map<std::vector<int>, long long> memo;
  return mn_rec(lambda.parts(), mu.parts(), 0, memo);
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

mpz_class class_size(const Partition& mu) {
  mpz_class z = 1;
  const auto& parts = mu.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    std::size_t mult = j - i;
    for (std::size_t k = 0; k < mult; ++k) z *= parts[i];
    z *= factorial(static_cast<int>(mult));
    i = j;
  }
  return factorial(mu.n()) / z;
}

Permutation class_representative(const Partition& mu) {
  std::vector<int> images(static_cast<std::size_t>(mu.n()));
  int next = 0;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k)
      images[static_cast<std::size_t>(next + k)] = next + (k + 1) % len + 1;
    next += len;
  }
  return Permutation::from_images(images);
}

mpz_class frobenius_count(int n, const std::vector<Partition>& classes) {
  if (classes.empty()) throw UsageError("frobenius count needs classes");
  for (const auto& c : classes)
    if (c.n() != n) throw UsageError("class is not a partition of n");
  std::size_t k = classes.size();
  Rational sum(0);
  for (const Partition& lambda : partitions_of(n)) {
    long long dim = mn_character(lambda, Partition(std::vector<int>(
                                             static_cast<std::size_t>(n), 1)));
    Rational term(1);
    for (const auto& c : classes) term *= Rational(mn_character(lambda, c));
    for (std::size_t e = 2; e < k; ++e) term /= Rational(dim);
    sum += term;
  }
  Rational scale(1);
  for (const auto& c : classes) scale *= Rational(class_size(c));
  scale /= Rational(factorial(n));
  Rational result = scale * sum;
  if (!result.is_integer() || result.sign() < 0)
    throw Error("frobenius count did not reduce to a nonnegative integer: " +
                result.str());
  return result.numerator();
}

std::vector<CharacterMultiplicity> edge_action_character_multiplicities(
    const EdgeLabeling& lab) {
  std::vector<CharacterMultiplicity> out;
  auto classes = partitions_of(5);
  for (const Partition& lambda : classes) {
    Rational inner(0);
    for (const Partition& mu : classes) {
      long fix = edge_action(class_representative(mu), lab).fixed_points();
      inner += Rational(class_size(mu)) * Rational(fix) *
               Rational(mn_character(lambda, mu));
    }
    inner /= Rational(120);
    if (!inner.is_integer())
      throw Error("non-integral character multiplicity for " + lambda.str());
    out.push_back({lambda, inner.numerator().get_si()});
  }
  return out;
}

long edge_action_character_self_product(const EdgeLabeling& lab) {
  Rational inner(0);
  for (const Partition& mu : partitions_of(5)) {
    long fix = edge_action(class_representative(mu), lab).fixed_points();
    inner += Rational(class_size(mu)) * Rational(fix) * Rational(fix);
  }
  inner /= Rational(120);
  if (!inner.is_integer()) throw Error("non-integral <pi,pi>");
  return inner.numerator().get_si();
}

} // namespace mforge
