#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "mforge/builtin.hpp"
#include "mforge/dessin.hpp"

using namespace mforge;

namespace {

Polynomial var_x() { return Polynomial{FieldElem(0), FieldElem(1)}; }

std::multiset<int> degree_multiset(const std::vector<DessinVertex>& vs) {
  std::multiset<int> out;
  for (const auto& v : vs) out.insert(v.attached_arcs);
  return out;
}

} // namespace

TEST_CASE("roots of x^2 - 1") {
  auto roots = roots_numeric(Polynomial{FieldElem(-1), FieldElem(0), FieldElem(1)});
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - std::complex<double>(-1, 0)) < 1e-12);
  CHECK(std::abs(roots[1] - std::complex<double>(1, 0)) < 1e-12);
}

TEST_CASE("roots of x^10 - 1 are the tenth roots of unity") {
  std::vector<FieldElem> c(11, FieldElem(0));
  c[0] = FieldElem(-1);
  c[10] = FieldElem(1);
  auto roots = roots_numeric(Polynomial(c));
  REQUIRE(roots.size() == 10);
  for (const auto& r : roots) {
    CHECK(std::abs(std::abs(r) - 1.0) < 1e-12);
    CHECK(std::abs(std::pow(r, 10) - std::complex<double>(1, 0)) < 1e-9);
  }
  // All distinct.
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      CHECK(std::abs(roots[i] - roots[j]) > 0.1);
}

TEST_CASE("a regular fiber of F1 has ten distinct points") {
  // t = 1/2 is a regular value: num(F1) - 1/2 den(F1) has 10 simple roots.
  Polynomial p = builtin::F1().num() - FieldElem(Rational(1, 2)) * builtin::F1().den();
  auto roots = roots_numeric(p);
  REQUIRE(roots.size() == 10);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      CHECK(std::abs(roots[i] - roots[j]) > 1e-6);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(roots_numeric(Polynomial{FieldElem(3)}), UsageError);
  CHECK_THROWS_AS(roots_numeric(Polynomial()), UsageError);
}

TEST_CASE("identity map renders a single segment") {
  DessinPlot plot =
      render_dessin(RationalFunction(var_x(), Polynomial{FieldElem(1)}), 50);
  REQUIRE(plot.arcs.size() == 1);
  REQUIRE(plot.black_vertices.size() == 1);
  REQUIRE(plot.white_vertices.size() == 1);
  CHECK(std::abs(plot.black_vertices[0].position) < 1e-12);
  CHECK(std::abs(plot.white_vertices[0].position - std::complex<double>(1, 0)) < 1e-12);
  CHECK(plot.black_vertices[0].attached_arcs == 1);
  CHECK(plot.white_vertices[0].attached_arcs == 1);
  CHECK(std::abs(plot.arcs[0].front()) < 1e-12);
  CHECK(std::abs(plot.arcs[0].back() - std::complex<double>(1, 0)) < 1e-12);
}

TEST_CASE("the dessin of F1 has the printed structure") {
  std::ostringstream svg;
  DessinPlot plot = render_dessin(builtin::F1(), 200, &svg);
  CHECK(plot.warnings.empty());
  CHECK(plot.arcs.size() == 10);
  CHECK(degree_multiset(plot.black_vertices) == std::multiset<int>{1, 3, 6});
  CHECK(degree_multiset(plot.white_vertices) ==
        std::multiset<int>{1, 1, 1, 1, 2, 2, 2});

  // Black vertices sit at 0, 1, -1 within the matching tolerance.
  for (const auto& v : plot.black_vertices) {
    double d0 = std::abs(v.position);
    double d1 = std::abs(v.position - std::complex<double>(1, 0));
    double dm1 = std::abs(v.position + std::complex<double>(1, 0));
    CHECK(std::min({d0, d1, dm1}) < 1e-9);
    if (d0 < 1e-9) CHECK(v.multiplicity == 6);
    if (d1 < 1e-9) CHECK(v.multiplicity == 3);
    if (dm1 < 1e-9) CHECK(v.multiplicity == 1);
  }

  std::string text = svg.str();
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') > 15);
}

TEST_CASE("the dessin of L is combinatorially the same") {
  DessinPlot plot = render_dessin(laurent_to_rational(builtin::L()), 200);
  CHECK(plot.arcs.size() == 10);
  CHECK(degree_multiset(plot.black_vertices) == std::multiset<int>{1, 3, 6});
  CHECK(degree_multiset(plot.white_vertices) ==
        std::multiset<int>{1, 1, 1, 1, 2, 2, 2});
}

TEST_CASE("vertex census matches the exact profile") {
  DessinPlot plot = render_dessin(builtin::F2(), 160);
  std::multiset<int> black_expected, white_expected;
  for (int part : builtin::black_partition().parts()) black_expected.insert(part);
  for (int part : builtin::white_partition().parts()) white_expected.insert(part);
  CHECK(degree_multiset(plot.black_vertices) == black_expected);
  CHECK(degree_multiset(plot.white_vertices) == white_expected);
}
