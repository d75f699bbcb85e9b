#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "mforge/characters.hpp"

using namespace mforge;

namespace {

// Independent dimension oracle: the hook length formula.
mpz_class hook_dimension(const Partition& lambda) {
  const auto& parts = lambda.parts();
  std::vector<int> conj(parts.empty() ? 0 : static_cast<std::size_t>(parts[0]), 0);
  for (int p : parts)
    for (int c = 0; c < p; ++c) conj[static_cast<std::size_t>(c)]++;
  mpz_class hooks = 1;
  for (std::size_t r = 0; r < parts.size(); ++r)
    for (int c = 0; c < parts[r]; ++c) {
      int arm = parts[r] - c - 1;
      int leg = conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
      hooks *= arm + leg + 1;
    }
  return factorial(lambda.n()) / hooks;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> all;
  std::sort(img.begin(), img.end());
  do {
    all.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return all;
}

// Exhaustive tuple count: pairs (x1, x2) with prescribed classes whose
// product closes with a third prescribed class.
mpz_class brute_force_triple_count(int n, const Partition& c1, const Partition& c2,
                                   const Partition& c3) {
  auto all = symmetric_group(n);
  mpz_class count = 0;
  for (const auto& x1 : all) {
    if (Partition(x1.cycle_type()) != c1) continue;
    for (const auto& x2 : all) {
      if (Partition(x2.cycle_type()) != c2) continue;
      // x1 x2 x3 = identity iff x3 = (x1 x2)^-1.
      if (Partition((x1 * x2).inverse().cycle_type()) == c3) ++count;
    }
  }
  return count;
}

} // namespace

TEST_CASE("partition enumeration") {
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{4});
  CHECK(p4.back() == Partition{1, 1, 1, 1});
  CHECK(partitions_of(10).size() == 42);
  CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(Partition({0, 2}), UsageError);
}

TEST_CASE("trivial and sign characters") {
  for (const auto& mu : partitions_of(6)) CHECK(mn_character(Partition{6}, mu) == 1);
  // Sign character on (5,5): two even cycles multiply to an even permutation.
  CHECK(mn_character(Partition{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, Partition{5, 5}) == 1);
  CHECK(mn_character(Partition{1, 1, 1, 1}, Partition{2, 1, 1}) == -1);
  CHECK_THROWS_AS(mn_character(Partition{3}, Partition{2, 2}), UsageError);
}

TEST_CASE("known S5 character column") {
  // chi(lambda) at the class of transpositions (2,1,1,1) for all lambda of 5.
  std::map<Partition, long long> expected = {
      {Partition{5}, 1},           {Partition{4, 1}, 2},
      {Partition{3, 2}, 1},        {Partition{3, 1, 1}, 0},
      {Partition{2, 2, 1}, -1},    {Partition{2, 1, 1, 1}, -2},
      {Partition{1, 1, 1, 1, 1}, -1}};
  for (const auto& [lambda, value] : expected)
    CHECK(mn_character(lambda, Partition{2, 1, 1, 1}) == value);
}

TEST_CASE("dimensions match the hook length formula") {
  for (int n = 1; n <= 10; ++n) {
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    Partition id_class(ones);
    mpz_class dim_square_sum = 0;
    for (const auto& lambda : partitions_of(n)) {
      long dim = static_cast<long>(mn_character(lambda, id_class));
      CHECK(mpz_class(dim) == hook_dimension(lambda));
      dim_square_sum += mpz_class(dim) * mpz_class(dim);
    }
    CHECK(dim_square_sum == factorial(n)); // column orthogonality at 1
  }
}

TEST_CASE("class sizes") {
  CHECK(class_size(Partition{5, 5}) == 72576); // 10!/(5^2 * 2!)
  CHECK(class_size(Partition{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}) == 1);
  CHECK(class_size(Partition{2, 1, 1, 1, 1, 1, 1, 1, 1}) == 45);
  mpz_class total = 0;
  for (const auto& mu : partitions_of(10)) total += class_size(mu);
  CHECK(total == factorial(10));
}

TEST_CASE("class representatives have the right type") {
  for (const auto& mu : partitions_of(7))
    CHECK(Partition(class_representative(mu).cycle_type()) == mu);
}

TEST_CASE("triple count for S3 against brute force") {
  // Two transpositions multiplying to a 3-cycle: 6 ordered pairs.
  Partition t{2, 1}, c{3};
  CHECK(frobenius_count(3, {t, t, c}) == 6);
  CHECK(frobenius_count(3, {t, t, c}) == brute_force_triple_count(3, t, t, c));
}

TEST_CASE("identity-only classes") {
  Partition id4{1, 1, 1, 1};
  CHECK(frobenius_count(4, {id4, id4, id4}) == 1);
}

TEST_CASE("triple counts for S4 against brute force") {
  auto classes = partitions_of(4);
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
  for (int trial = 0; trial < 5; ++trial) {
    const Partition& c1 = classes[pick(rng)];
    const Partition& c2 = classes[pick(rng)];
    const Partition& c3 = classes[pick(rng)];
    CAPTURE(c1.str());
    CAPTURE(c2.str());
    CAPTURE(c3.str());
    CHECK(frobenius_count(4, {c1, c2, c3}) ==
          brute_force_triple_count(4, c1, c2, c3));
  }
}

TEST_CASE("the map count over S10") {
  mpz_class count = frobenius_count(
      10, {Partition{6, 3, 1}, Partition{2, 2, 2, 1, 1, 1, 1}, Partition{5, 5}});
  CHECK(count == 25401600);
  CHECK(count == 7 * factorial(10));
}

TEST_CASE("edge action character multiplicities over S5") {
  const auto& lab = EdgeLabeling::pentagon_pentagram();
  auto mults = edge_action_character_multiplicities(lab);
  REQUIRE(mults.size() == 7);
  long total_dim = 0;
  long self = 0;
  std::vector<int> ones(5, 1);
  for (const auto& [lambda, mult] : mults) {
    CHECK(mult >= 0);
    if (lambda == Partition{5}) CHECK(mult == 1); // transitive action
    total_dim +=
        mult * static_cast<long>(mn_character(lambda, Partition(ones)));
    self += mult * mult;
  }
  CHECK(total_dim == 10);
  CHECK(self == 3);
  CHECK(edge_action_character_self_product(lab) == 3);

  // Brute force over all 120 group elements.
  long long fix_square_sum = 0;
  for (const auto& g : symmetric_group(5)) {
    int f = edge_action(g, lab).fixed_points();
    fix_square_sum += static_cast<long long>(f) * f;
  }
  CHECK(fix_square_sum == 3 * 120);
}

TEST_CASE("the S10 count agrees with a symmetry-reduced enumeration") {
  // N(C1,C2,C3) = sum over g0 in C1 of #{g1 in C2 : (g0 g1)^-1 in C3}, and
  // the inner count is conjugation-invariant, so one representative g0 and
  // a sweep over the 3150 elements of C2 settle the full number.
  Permutation g0 = class_representative(Partition{6, 3, 1});
  long inner = 0;
  long class2_size = 0;
  std::vector<int> points(10);
  std::iota(points.begin(), points.end(), 0);

  std::function<void(std::vector<int>&, std::vector<std::pair<int, int>>&)>
      pair_up = [&](std::vector<int>& rest, std::vector<std::pair<int, int>>& pairs) {
        if (rest.empty()) {
          std::vector<int> images(10);
          std::iota(images.begin(), images.end(), 1);
          for (auto [a, b] : pairs) {
            images[static_cast<std::size_t>(a)] = b + 1;
            images[static_cast<std::size_t>(b)] = a + 1;
          }
          Permutation g1 = Permutation::from_images(images);
          ++class2_size;
          if (Partition((g0 * g1).cycle_type()) == Partition{5, 5}) ++inner;
          return;
        }
        int a = rest.front();
        for (std::size_t i = 1; i < rest.size(); ++i) {
          int b = rest[i];
          std::vector<int> next;
          for (std::size_t j = 1; j < rest.size(); ++j)
            if (j != i) next.push_back(rest[j]);
          pairs.emplace_back(a, b);
          pair_up(next, pairs);
          pairs.pop_back();
        }
      };

  // choose the six moved points, then pair them up
  for (int mask = 0; mask < (1 << 10); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 6) continue;
    std::vector<int> chosen;
    for (int i = 0; i < 10; ++i)
      if (mask & (1 << i)) chosen.push_back(i);
    std::vector<std::pair<int, int>> pairs;
    pair_up(chosen, pairs);
  }

  CHECK(class2_size == 3150);
  CHECK(class_size(Partition{2, 2, 2, 1, 1, 1, 1}) == 3150);
  mpz_class total = class_size(Partition{6, 3, 1}) * mpz_class(inner);
  CHECK(total == frobenius_count(10, {Partition{6, 3, 1},
                                      Partition{2, 2, 2, 1, 1, 1, 1},
                                      Partition{5, 5}}));
  CHECK(total == 25401600);
}
