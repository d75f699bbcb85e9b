#include "mforge/builtin.hpp"

namespace mforge::builtin {

const FieldElem& coeff_K() {
  static const FieldElem k(Rational(11, 216), Rational(5, 216));
  return k;
}

const FieldElem& coeff_a() {
  static const FieldElem a(Rational(-3, 2), Rational(1, 2));
  return a;
}

const FieldElem& coeff_b() {
  static const FieldElem b(Rational(7, 2), Rational(-3, 2));
  return b;
}

const LaurentPoly& L() {
  static const LaurentPoly l = [] {
    Polynomial z{FieldElem(0), FieldElem(1)};
    Polynomial num = Polynomial::constant(coeff_K()) *
                     pow(z - Polynomial{FieldElem(1)}, 6) *
                     pow(z - Polynomial::constant(coeff_a()), 3) *
                     (z - Polynomial::constant(coeff_b()));
    LaurentPoly out;
    for (long i = 0; i <= num.degree(); ++i) {
      FieldElem c = num.coeff(static_cast<std::size_t>(i));
      if (!c.is_zero()) out.set_coeff(i - 5, c);
    }
    return out;
  }();
  return l;
}

const RationalFunction& F1() {
  static const RationalFunction f =
      build_candidate(FieldElem(Rational(50000, 27)), FieldElem(4), FieldElem(-1));
  return f;
}

const RationalFunction& F2() {
  // 337500 x^6(x-1)^3(x+1) / (11x^2+4x-16)^5 with the quadratic made monic:
  // 11^5 moves into the constant.
  static const RationalFunction f =
      build_candidate(FieldElem(Rational(337500, 161051)),
                      FieldElem(Rational(4, 11)), FieldElem(Rational(-16, 11)));
  return f;
}

Mobius z_from_x() {
  return Mobius(FieldElem(2, -1), FieldElem(-1), FieldElem(2, 1), FieldElem(-1));
}

Mobius x_from_z() {
  return Mobius(FieldElem(1), FieldElem(-1), FieldElem(2, 1), -FieldElem(2, -1));
}

const Permutation& vertex_f() {
  static const Permutation p = Permutation::from_cycles("(1,2,3,4,5)", 5);
  return p;
}

const Permutation& vertex_a() {
  static const Permutation p = Permutation::from_cycles("(2,5)", 5);
  return p;
}

const Permutation& vertex_s() {
  static const Permutation p = Permutation::from_cycles("(1,2)(3,5,4)", 5);
  return p;
}

const Permutation& phi() {
  static const Permutation p =
      edge_action(vertex_f(), EdgeLabeling::pentagon_pentagram());
  return p;
}

const Permutation& alpha() {
  static const Permutation p =
      edge_action(vertex_a(), EdgeLabeling::pentagon_pentagram());
  return p;
}

const Permutation& sigma() {
  static const Permutation p =
      edge_action(vertex_s(), EdgeLabeling::pentagon_pentagram());
  return p;
}

std::vector<Permutation> monodromy_generators() {
  return {sigma(), alpha(), phi()};
}

std::vector<int> sign_split_vector() {
  return {1, 1, 1, 1, 1, -1, -1, -1, -1, -1};
}

const std::vector<VectorF>& fans() {
  static const std::vector<VectorF> v =
      fan_vectors(EdgeLabeling::pentagon_pentagram());
  return v;
}

const std::vector<VectorF>& hamiltonians() {
  static const std::vector<VectorF> w = [] {
    // The six cycle-minus-complement vectors with signs chosen so that every
    // edge carries +1 in exactly three of them; then the six sum to zero.
    const int rows[6][10] = {
        {1, -1, 1, -1, 1, -1, 1, 1, -1, -1},
        {1, 1, -1, 1, -1, -1, -1, 1, 1, -1},
        {-1, 1, 1, -1, 1, -1, -1, -1, 1, 1},
        {1, -1, 1, 1, -1, 1, -1, -1, -1, 1},
        {-1, 1, -1, 1, 1, 1, 1, -1, -1, -1},
        {-1, -1, -1, -1, -1, 1, 1, 1, 1, 1},
    };
    std::vector<VectorF> out;
    for (const auto& row : rows) {
      VectorF v(10);
      for (int i = 0; i < 10; ++i) v(i) = FieldElem(row[i]);
      out.push_back(std::move(v));
    }
    return out;
  }();
  return w;
}

const Partition& black_partition() {
  static const Partition p{6, 3, 1};
  return p;
}

const Partition& white_partition() {
  static const Partition p{2, 2, 2, 1, 1, 1, 1};
  return p;
}

const Partition& face_partition() {
  static const Partition p{5, 5};
  return p;
}

} // namespace mforge::builtin
