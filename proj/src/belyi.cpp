#include "mforge/belyi.hpp"

#include <algorithm>
#include <ostream>

#include "mforge/error.hpp"

namespace mforge {

RationalFunction::RationalFunction() : den_{FieldElem(1)} {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial{FieldElem(1)};
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  FieldElem lead_inv = den_.leading().inverse();
  num_ = lead_inv * num_;
  den_ = lead_inv * den_;
}

FieldElem RationalFunction::evaluate(const FieldElem& x) const {
  FieldElem d = den_.evaluate(x);
  if (d.is_zero()) throw DivisionByZeroError("evaluation at a pole");
  return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(mforge::derivative(num_) * den_ - num_ * mforge::derivative(den_),
                          den_ * den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator-(const RationalFunction& f, const FieldElem& c) {
  return RationalFunction(f.num_ - c * f.den_, f.den_);
}

std::string RationalFunction::str(std::string_view var) const {
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.str();
}

Mobius::Mobius(FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero())
    throw UsageError("Mobius map needs ad - bc != 0");
}

Mobius Mobius::identity() {
  return Mobius(FieldElem(1), FieldElem(0), FieldElem(0), FieldElem(1));
}

FieldElem Mobius::apply(const FieldElem& x) const {
  FieldElem den = c_ * x + d_;
  if (den.is_zero()) throw DivisionByZeroError("Mobius map evaluated at its pole");
  return (a_ * x + b_) / den;
}

Mobius Mobius::inverse() const { return Mobius(d_, -b_, -c_, a_); }

RationalFunction build_candidate(const FieldElem& K, const FieldElem& a,
                                 const FieldElem& b) {
  if (K.is_zero()) throw DegeneracyError("vanishing leading constant");
  Polynomial x{FieldElem(0), FieldElem(1)};
  Polynomial quad{b, a, FieldElem(1)};
  Polynomial num = Polynomial::constant(K) * pow(x, 6) *
                   pow(x - Polynomial{FieldElem(1)}, 3) *
                   (x + Polynomial{FieldElem(1)});
  // A root of the quadratic among the prescribed zeros collapses the
  // degree: the parasitic situation.
  if (gcd(quad, num).degree() > 0)
    throw DegeneracyError("pole quadratic shares a root with the numerator");
  return RationalFunction(num, pow(quad, 5));
}

Polynomial critical_cubic(const FieldElem& a, const FieldElem& b) {
  FieldElem five_a_two = FieldElem(5) * a + FieldElem(2);
  if (five_a_two.is_zero())
    throw DegeneracyError("5a + 2 = 0 degenerates the fiber over 1");
  return Polynomial{FieldElem(-6) * b, -(a - FieldElem(2) * b),
                    FieldElem(2) * a + FieldElem(10) * b + FieldElem(4),
                    five_a_two};
}

namespace {

Partition fiber_partition(const Polynomial& g, long map_degree,
                          std::vector<std::pair<Polynomial, int>>* factors) {
  std::vector<int> parts;
  if (g.degree() > 0) {
    for (const auto& [factor, mult] : squarefree_decomposition(g)) {
      for (long r = 0; r < factor.degree(); ++r) parts.push_back(mult);
      if (factors) factors->emplace_back(factor, mult);
    }
  }
  if (g.degree() < map_degree)
    parts.push_back(static_cast<int>(map_degree - g.degree()));
  return Partition(parts);
}

} // namespace

RamificationProfile ramification_profile(const RationalFunction& F) {
  long n = F.map_degree();
  if (n < 1) throw UsageError("constant function has no ramification profile");
  const Polynomial& num = F.num();
  const Polynomial& den = F.den();
  Polynomial num_minus_den = num - den;
  if (num_minus_den.is_zero()) throw UsageError("the constant function 1");

  std::vector<std::pair<Polynomial, int>> factors;
  RamificationProfile profile;
  profile.over_zero = fiber_partition(num, n, &factors);
  profile.over_one = fiber_partition(num_minus_den, n, &factors);
  profile.over_infinity = fiber_partition(den, n, &factors);

  // Every finite critical point of F shows up in the numerator of F' with
  // multiplicity one less than its fiber multiplicity, so the three fibers
  // must exhaust it exactly.
  Polynomial wronskian = derivative(num) * den - num * derivative(den);
  Polynomial accounted = Polynomial::constant(FieldElem(1));
  for (const auto& [factor, mult] : factors)
    accounted = accounted * pow(factor, static_cast<unsigned long>(mult - 1));
  Polynomial leftover;
  try {
    leftover = div_exact(wronskian, accounted);
  } catch (const NotDivisibleError&) {
    throw NotBelyiError("fiber structure does not divide the derivative numerator");
  }
  if (leftover.degree() > 0)
    throw NotBelyiError("extra critical values; unaccounted derivative factor " +
                        leftover.monic().str("x"));

  long total_ramification = 0;
  for (const Partition* p :
       {&profile.over_zero, &profile.over_one, &profile.over_infinity})
    total_ramification += n - static_cast<long>(p->size());
  if (total_ramification != 2 * n - 2)
    throw NotBelyiError("ramification over {0,1,inf} accounts for " +
                        std::to_string(total_ramification) + " of " +
                        std::to_string(2 * n - 2));
  return profile;
}

RationalFunction mobius_substitute(const RationalFunction& F, const Mobius& m) {
  long n = F.map_degree();
  Polynomial top{m.b(), m.a()};    // a z + b, ascending
  Polynomial bottom{m.d(), m.c()}; // c z + d
  std::vector<Polynomial> top_pow{Polynomial::constant(FieldElem(1))};
  std::vector<Polynomial> bottom_pow{Polynomial::constant(FieldElem(1))};
  for (long i = 1; i <= n; ++i) {
    top_pow.push_back(top_pow.back() * top);
    bottom_pow.push_back(bottom_pow.back() * bottom);
  }
  auto substitute = [&](const Polynomial& p) {
    Polynomial out;
    for (long i = 0; i <= p.degree(); ++i)
      out += p.coeff(static_cast<std::size_t>(i)) * top_pow[static_cast<std::size_t>(i)] *
             bottom_pow[static_cast<std::size_t>(n - i)];
    return out;
  };
  return RationalFunction(substitute(F.num()), substitute(F.den()));
}

std::vector<std::pair<Polynomial, int>> fiber_factors(const RationalFunction& F,
                                                      SpecialFiber fiber) {
  Polynomial g;
  switch (fiber) {
    case SpecialFiber::zero: g = F.num(); break;
    case SpecialFiber::one: g = F.num() - F.den(); break;
    case SpecialFiber::infinity_point: g = F.den(); break;
  }
  if (g.degree() <= 0) return {};
  return squarefree_decomposition(g);
}

LaurentPoly rational_to_laurent(const RationalFunction& F) {
  const Polynomial& den = F.den();
  for (long i = 0; i < den.degree(); ++i)
    if (!den.coeff(static_cast<std::size_t>(i)).is_zero())
      throw UsageError("denominator is not a power of the variable");
  long shift = den.degree();
  LaurentPoly out;
  for (long i = 0; i <= F.num().degree(); ++i) {
    FieldElem c = F.num().coeff(static_cast<std::size_t>(i));
    if (!c.is_zero()) out.set_coeff(i - shift, c);
  }
  return out;
}

RationalFunction laurent_to_rational(const LaurentPoly& f) {
  if (f.is_zero()) return RationalFunction();
  long shift = std::max(0L, -f.min_degree());
  std::vector<FieldElem> num(static_cast<std::size_t>(f.max_degree() + shift) + 1,
                             FieldElem());
  for (const auto& [k, c] : f.terms()) num[static_cast<std::size_t>(k + shift)] = c;
  return RationalFunction(Polynomial(std::move(num)),
                          Polynomial::monomial(static_cast<unsigned long>(shift),
                                               FieldElem(1)));
}

} // namespace mforge
