#include <doctest.h>

#include <random>

#include "mforge/builtin.hpp"
#include "mforge/laurent.hpp"

using namespace mforge;

namespace {

LaurentPoly rand_laurent(std::mt19937_64& rng, int max_terms = 6, long span = 7) {
  std::uniform_int_distribution<long> deg(-span, span);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<int> count(0, max_terms);
  LaurentPoly f;
  int terms = count(rng);
  for (int t = 0; t < terms; ++t)
    f += LaurentPoly::monomial(
        deg(rng), FieldElem(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  return f;
}

const LaurentPoly z_plus_inv =
    LaurentPoly::monomial(1, FieldElem(1)) + LaurentPoly::monomial(-1, FieldElem(1));

} // namespace

TEST_CASE("laurent product basics") {
  LaurentPoly zminus = LaurentPoly::monomial(1, FieldElem(1)) +
                       LaurentPoly::monomial(-1, FieldElem(-1));
  LaurentPoly prod = z_plus_inv * zminus;
  CHECK(prod == LaurentPoly::monomial(2, FieldElem(1)) +
                    LaurentPoly::monomial(-2, FieldElem(-1)));
  CHECK((z_plus_inv * LaurentPoly()).is_zero());
}

TEST_CASE("expanded numerator of L matches the direct product") {
  // K (z-1)^6 (z-a)^3 (z-b) assembled with Laurent multiplication must agree
  // with the polynomial expansion behind builtin::L().
  LaurentPoly zm1 = LaurentPoly::monomial(1, FieldElem(1)) +
                    LaurentPoly::constant(FieldElem(-1));
  LaurentPoly zma = LaurentPoly::monomial(1, FieldElem(1)) +
                    LaurentPoly::constant(-builtin::coeff_a());
  LaurentPoly zmb = LaurentPoly::monomial(1, FieldElem(1)) +
                    LaurentPoly::constant(-builtin::coeff_b());
  LaurentPoly num = builtin::coeff_K() * (pow(zm1, 6) * pow(zma, 3) * zmb);
  LaurentPoly expected = builtin::L() * LaurentPoly::monomial(5, FieldElem(1));
  CHECK(num == expected);
}

TEST_CASE("lowest coefficient of L is K a^3 b") {
  FieldElem expected = builtin::coeff_K() * pow(builtin::coeff_a(), 3) * builtin::coeff_b();
  CHECK(builtin::L().coeff(-5) == expected);
  CHECK(!expected.is_zero());
}

TEST_CASE("powers") {
  CHECK(pow(z_plus_inv, 2) == LaurentPoly::monomial(-2, FieldElem(1)) +
                                  LaurentPoly::constant(FieldElem(2)) +
                                  LaurentPoly::monomial(2, FieldElem(1)));
  CHECK(pow(builtin::L(), 0) == LaurentPoly::constant(FieldElem(1)));
  CHECK(pow(builtin::L(), 3).min_degree() == -15);
  CHECK(pow(builtin::L(), 3).max_degree() == 15);
}

TEST_CASE("derivative and residue") {
  CHECK(derivative(LaurentPoly::monomial(-1, FieldElem(1))) ==
        LaurentPoly::monomial(-2, FieldElem(-1)));
  CHECK(derivative(LaurentPoly::constant(FieldElem(7))).is_zero());
  // d/dz (z + 1/z) = 1 - z^-2
  CHECK(derivative(z_plus_inv) == LaurentPoly::constant(FieldElem(1)) +
                                      LaurentPoly::monomial(-2, FieldElem(-1)));
  CHECK(residue(LaurentPoly::monomial(-1, FieldElem(1))) == FieldElem(1));
  CHECK(residue(LaurentPoly::monomial(2, FieldElem(1)) +
                LaurentPoly::constant(FieldElem(3))) == FieldElem(0));
}

TEST_CASE("derivatives have no residue and integrate by parts") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 120; ++trial) {
    LaurentPoly f = rand_laurent(rng);
    LaurentPoly g = rand_laurent(rng);
    CHECK(residue(derivative(f)) == FieldElem(0));
    CHECK(residue(f * derivative(g)) == -residue(g * derivative(f)));
  }
}

TEST_CASE("power additivity") {
  std::mt19937_64 rng(556);
  std::uniform_int_distribution<unsigned long> small(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly f = rand_laurent(rng, 4, 4);
    unsigned long i = small(rng), j = small(rng);
    CHECK(pow(f, i + j) == pow(f, i) * pow(f, j));
  }
}

TEST_CASE("composition of a polynomial into a Laurent polynomial") {
  Polynomial t2{FieldElem(0), FieldElem(0), FieldElem(1)};
  CHECK(compose(t2, builtin::L()) == builtin::L() * builtin::L());
  CHECK(compose(Polynomial{FieldElem(1)}, builtin::L()) ==
        LaurentPoly::constant(FieldElem(1)));
  Polynomial t{FieldElem(0), FieldElem(1)};
  CHECK(compose(t, builtin::L()) == builtin::L());
}

TEST_CASE("polynomial gcd") {
  Polynomial x2m1{FieldElem(-1), FieldElem(0), FieldElem(1)};
  Polynomial xm1{FieldElem(-1), FieldElem(1)};
  CHECK(gcd(x2m1, xm1) == xm1);
  Polynomial f{FieldElem(3), FieldElem(6)};
  CHECK(gcd(f, Polynomial()) == f.monic());
  CHECK_THROWS_AS(gcd(Polynomial(), Polynomial()), UsageError);
}

TEST_CASE("exact division") {
  Polynomial x2m1{FieldElem(-1), FieldElem(0), FieldElem(1)};
  Polynomial xm1{FieldElem(-1), FieldElem(1)};
  Polynomial xp1{FieldElem(1), FieldElem(1)};
  CHECK(div_exact(x2m1, xm1) == xp1);
  CHECK(div_exact(x2m1, Polynomial{FieldElem(1)}) == x2m1);
  CHECK_THROWS_AS(div_exact(xp1, x2m1), NotDivisibleError);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    LaurentPoly a = rand_laurent(rng, 4, 3);
    LaurentPoly b = rand_laurent(rng, 4, 3);
    Polynomial f = to_polynomial(a * LaurentPoly::monomial(3, FieldElem(1)));
    Polynomial g = to_polynomial(b * LaurentPoly::monomial(3, FieldElem(1)));
    if (g.is_zero()) continue;
    Polynomial product = f * g;
    CHECK(div_exact(product, g) * g == product);
  }
}

TEST_CASE("squarefree structure") {
  Polynomial x{FieldElem(0), FieldElem(1)};
  Polynomial f = pow(x, 3) * pow(x - Polynomial{FieldElem(1)}, 2) *
                 (x + Polynomial{FieldElem(2)});
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].second == 1);
  CHECK(parts[0].first == x + Polynomial{FieldElem(2)});
  CHECK(parts[1].second == 2);
  CHECK(parts[1].first == x - Polynomial{FieldElem(1)});
  CHECK(parts[2].second == 3);
  CHECK(parts[2].first == x);
}

TEST_CASE("laurent text form round trip") {
  CHECK(builtin::L() == LaurentPoly::parse(builtin::L().str()));
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::parse("0").is_zero());
  LaurentPoly q1 = z_plus_inv;
  CHECK(q1.str() == "(1/1)*z^-1+(1/1)*z^1");
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    LaurentPoly f = rand_laurent(rng);
    CHECK(LaurentPoly::parse(f.str()) == f);
  }
}
