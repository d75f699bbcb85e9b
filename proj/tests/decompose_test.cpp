#include <doctest.h>

#include <random>

#include "mforge/basis.hpp"
#include "mforge/builtin.hpp"
#include "mforge/decompose.hpp"

using namespace mforge;

namespace {

const std::vector<LaurentPoly>& basis() {
  static const std::vector<LaurentPoly> b = solve_basis(builtin::L());
  return b;
}

Polynomial rand_poly(std::mt19937_64& rng, long max_deg = 3) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<FieldElem> c;
  long d = deg(rng);
  for (long i = 0; i <= d; ++i)
    c.push_back(FieldElem(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  return Polynomial(std::move(c));
}

LaurentPoly rand_laurent(std::mt19937_64& rng, int max_terms = 6, long span = 9) {
  std::uniform_int_distribution<long> deg(-span, span);
  std::uniform_int_distribution<long> num(-7, 7);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> count(1, max_terms);
  LaurentPoly f;
  int terms = count(rng);
  for (int t = 0; t < terms; ++t)
    f += LaurentPoly::monomial(
        deg(rng), FieldElem(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  return f;
}

} // namespace

TEST_CASE("minimal degree split") {
  CHECK(min_degree_split(-13) == std::pair<long, int>{2, 3});
  CHECK(min_degree_split(0) == std::pair<long, int>{0, 0});
  CHECK(min_degree_split(-5) == std::pair<long, int>{1, 0});
  CHECK(min_degree_split(-4) == std::pair<long, int>{0, 4});
  CHECK_THROWS_AS(min_degree_split(1), UsageError);
}

TEST_CASE("single basis element decomposes in one step") {
  Decomposition d = decompose(basis()[3], builtin::L(), basis());
  CHECK(d.remainder.is_zero());
  CHECK(d.r_polys[3] == Polynomial{FieldElem(1)});
  for (std::size_t j : {0u, 1u, 2u, 4u}) CHECK(d.r_polys[j].is_zero());
}

TEST_CASE("constants fold into the first coefficient polynomial") {
  Decomposition d = decompose(LaurentPoly::constant(FieldElem(5)), builtin::L(), basis());
  CHECK(d.remainder.is_zero());
  CHECK(d.r_polys[0] == Polynomial{FieldElem(5)});
}

TEST_CASE("constructed combination is recovered exactly") {
  // (t^2 + 1 at L) * Q_2 + (t at L) * Q_4
  std::array<Polynomial, 5> r;
  r[2] = Polynomial{FieldElem(1), FieldElem(0), FieldElem(1)};
  r[4] = Polynomial{FieldElem(0), FieldElem(1)};
  LaurentPoly q = reconstruct(r, basis(), builtin::L());
  Decomposition d = decompose(q, builtin::L(), basis());
  CHECK(d.remainder.is_zero());
  for (std::size_t j = 0; j < 5; ++j) CHECK(d.r_polys[j] == r[j]);
}

TEST_CASE("reconstruct basics") {
  std::array<Polynomial, 5> zero{};
  CHECK(reconstruct(zero, basis(), builtin::L()).is_zero());
  std::array<Polynomial, 5> one{};
  one[0] = Polynomial{FieldElem(1)};
  CHECK(reconstruct(one, basis(), builtin::L()) ==
        LaurentPoly::constant(FieldElem(1)));
}

TEST_CASE("reconstructions are solutions of the moment problem") {
  std::mt19937_64 rng(2468);
  std::vector<LaurentPoly> qs;
  for (int trial = 0; trial < 4; ++trial) {
    std::array<Polynomial, 5> r;
    for (auto& p : r) p = rand_poly(rng);
    qs.push_back(reconstruct(r, basis(), builtin::L()));
  }
  for (const auto& rep : verify_solutions(builtin::L(), qs, 12))
    CHECK(rep.all_zero);
}

TEST_CASE("decomposition is exact on arbitrary inputs") {
  std::mt19937_64 rng(1357);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly q = rand_laurent(rng);
    Decomposition d = decompose(q, builtin::L(), basis());
    LaurentPoly back = reconstruct(d.r_polys, basis(), builtin::L());
    back += to_laurent(d.remainder);
    CHECK(back == q);
  }
}

TEST_CASE("roundtrip recovers random coefficient polynomials exactly") {
  std::mt19937_64 rng(8642);
  for (int trial = 0; trial < 25; ++trial) {
    std::array<Polynomial, 5> r;
    for (auto& p : r) p = rand_poly(rng);
    LaurentPoly q = reconstruct(r, basis(), builtin::L());
    Decomposition d = decompose(q, builtin::L(), basis());
    CHECK(d.remainder.is_zero());
    for (std::size_t j = 0; j < 5; ++j) CHECK(d.r_polys[j] == r[j]);
  }
}

TEST_CASE("representation is injective") {
  std::mt19937_64 rng(11235);
  for (int trial = 0; trial < 15; ++trial) {
    std::array<Polynomial, 5> r1, r2;
    for (auto& p : r1) p = rand_poly(rng);
    for (auto& p : r2) p = rand_poly(rng);
    if (r1 == r2) continue;
    CHECK(reconstruct(r1, basis(), builtin::L()) !=
          reconstruct(r2, basis(), builtin::L()));
  }
}

TEST_CASE("classification") {
  LaurentPoly good = basis()[1] + builtin::L() * basis()[2];
  Classification c = classify(good, builtin::L(), basis());
  CHECK(c.is_solution);
  CHECK(c.decomposition.remainder.is_zero());
  CHECK(c.report.all_zero);

  // z^-1 reduces via Q_1, leaving -z: not a solution.
  Classification bad =
      classify(LaurentPoly::monomial(-1, FieldElem(1)), builtin::L(), basis());
  CHECK_FALSE(bad.is_solution);
  CHECK(bad.decomposition.remainder ==
        Polynomial{FieldElem(0), FieldElem(-1)});

  Classification constant =
      classify(LaurentPoly::constant(FieldElem(7)), builtin::L(), basis());
  CHECK(constant.is_solution);
  CHECK(constant.decomposition.r_polys[0] == Polynomial{FieldElem(7)});
}
