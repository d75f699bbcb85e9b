#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mforge/numfield.hpp"

namespace mforge {

/// Laurent polynomial over FieldElem: finitely many terms c_k * z^k with
/// integer k of either sign. Only nonzero coefficients are stored; the zero
/// polynomial has empty support.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly constant(FieldElem c);
  static LaurentPoly monomial(long k, FieldElem c);
  // Accepts the textual form produced by str(): "(coeff)*z^k" terms joined
  // by '+', ascending k; "0" for the zero polynomial.
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  long min_degree() const; // UsageError on the zero polynomial
  long max_degree() const;
  long degree_span() const; // max_degree - min_degree, 0 if constant or zero

  FieldElem coeff(long k) const;
  void set_coeff(long k, FieldElem c); // storing zero erases the term
  const std::map<long, FieldElem>& terms() const { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const FieldElem& c, const LaurentPoly& f);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  std::map<long, FieldElem> coeffs_;
};

LaurentPoly pow(const LaurentPoly& f, unsigned long i);
LaurentPoly derivative(const LaurentPoly& f);
// Coefficient of z^-1; this is the residue at 0 up to the 2*pi*i factor.
FieldElem residue(const LaurentPoly& f);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// Ordinary polynomial over FieldElem, dense coefficients from degree 0 up,
/// leading coefficient nonzero unless the polynomial is zero.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<FieldElem> ascending);
  explicit Polynomial(std::vector<FieldElem> ascending);
  static Polynomial constant(FieldElem c);
  static Polynomial monomial(unsigned long k, FieldElem c);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const FieldElem& leading() const;
  FieldElem coeff(std::size_t k) const;
  const std::vector<FieldElem>& coeffs() const { return c_; }

  FieldElem evaluate(const FieldElem& x) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElem& c, const Polynomial& f);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  std::string str(std::string_view var = "t") const;

private:
  void trim();
  std::vector<FieldElem> c_;
};

Polynomial derivative(const Polynomial& f);
Polynomial pow(const Polynomial& f, unsigned long i);

// Quotient and remainder of f by g (g != 0).
std::pair<Polynomial, Polynomial> div_mod(const Polynomial& f, const Polynomial& g);
// Exact quotient; NotDivisibleError if the remainder is nonzero.
Polynomial div_exact(const Polynomial& f, const Polynomial& g);
// Monic gcd by the Euclidean algorithm; UsageError when both are zero.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

// f = const * product of factor^multiplicity with squarefree, pairwise
// coprime factors (Yun's algorithm); returned sorted by multiplicity.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

// R evaluated at f by Horner over Laurent arithmetic.
LaurentPoly compose(const Polynomial& R, const LaurentPoly& f);

LaurentPoly to_laurent(const Polynomial& f);
// Requires min_degree(f) >= 0.
Polynomial to_polynomial(const LaurentPoly& f);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

} // namespace mforge
