#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mforge/laurent.hpp"
#include "mforge/partition.hpp"

namespace mforge {

/// Quotient of two polynomials in reduced form (gcd 1) with a monic
/// denominator, so equal functions have equal representations.
class RationalFunction {
public:
  RationalFunction(); // the zero function 0/1
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  // Degree as a map of the sphere.
  long map_degree() const { return std::max(num_.degree(), den_.degree()); }

  FieldElem evaluate(const FieldElem& x) const; // DivisionByZeroError at poles

  RationalFunction derivative() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  // F - c for a constant c.
  friend RationalFunction operator-(const RationalFunction& f, const FieldElem& c);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string str(std::string_view var = "x") const;

private:
  Polynomial num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

/// Linear fractional map x -> (a x + b)/(c x + d), ad - bc != 0.
class Mobius {
public:
  Mobius(FieldElem a, FieldElem b, FieldElem c, FieldElem d);
  static Mobius identity();

  const FieldElem& a() const { return a_; }
  const FieldElem& b() const { return b_; }
  const FieldElem& c() const { return c_; }
  const FieldElem& d() const { return d_; }

  FieldElem apply(const FieldElem& x) const; // DivisionByZeroError at the pole
  Mobius inverse() const;

private:
  FieldElem a_, b_, c_, d_;
};

/// Multiplicity partitions of the three special fibers of a candidate
/// covering of the sphere.
struct RamificationProfile {
  Partition over_zero;
  Partition over_one;
  Partition over_infinity;
};

// K x^6 (x-1)^3 (x+1) / (x^2 + a x + b)^5 in reduced form; DegeneracyError
// when the quadratic shares a root with the numerator (a parasitic
// parameter set) or K = 0.
RationalFunction build_candidate(const FieldElem& K, const FieldElem& a,
                                 const FieldElem& b);

// The cubic (5a+2)x^3 + (2a+10b+4)x^2 - (a-2b)x - 6b carrying the double
// points of the fiber over 1; DegeneracyError when 5a+2 = 0.
Polynomial critical_cubic(const FieldElem& a, const FieldElem& b);

// Fiber multiplicity partitions over 0, 1 and infinity, read off from exact
// squarefree structure, with two certificates that no ramification exists
// anywhere else: the numerator of F' must be exhausted by the three fibers,
// and the genus-0 ramification count must reach 2 deg - 2. NotBelyiError
// otherwise.
RamificationProfile ramification_profile(const RationalFunction& F);

// F o m as a reduced rational function.
RationalFunction mobius_substitute(const RationalFunction& F, const Mobius& m);

enum class SpecialFiber { zero, one, infinity_point };

// Squarefree factors of the finite part of one special fiber with their
// multiplicities (the point at infinity, when it lies in the fiber, is not
// represented by a polynomial factor).
std::vector<std::pair<Polynomial, int>> fiber_factors(const RationalFunction& F,
                                                      SpecialFiber fiber);

// Conversions between the two views of a function with only 0 and infinity
// as poles.
LaurentPoly rational_to_laurent(const RationalFunction& F); // den must be z^m
RationalFunction laurent_to_rational(const LaurentPoly& f);

} // namespace mforge
