#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "mforge/error.hpp"

namespace mforge {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {} // NOLINT: implicit by design
  Rational(mpz_class n) : num_(std::move(n)), den_(1) {}
  Rational(mpz_class n, mpz_class d);

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  // Canonical form makes equality componentwise.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // num += a*b, with a fast in-place path when everything is integral.
  void addmul(const Rational& a, const Rational& b);
  void addmul_scaled(const Rational& a, const Rational& b, long scale);

  double to_double() const;
  std::string str() const; // always "p/q"

private:
  struct raw_t {};
  Rational(raw_t, mpz_class n, mpz_class d)
      : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();

  mpz_class num_, den_;
};

Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt d), with exact
/// rational a, b. The discriminant d (squarefree, >= 2; default 5) travels
/// with the value. Purely rational values (b = 0) embed in every field and
/// combine with anything; combining two genuinely irrational values from
/// different fields raises FieldMismatchError.
class FieldElem {
public:
  FieldElem() : d_(5) {}
  FieldElem(long v) : rat_(v), d_(5) {} // NOLINT: implicit by design
  FieldElem(Rational rat) : rat_(std::move(rat)), d_(5) {} // NOLINT
  FieldElem(long rat, long irr) : rat_(rat), irr_(irr), d_(5) {}
  FieldElem(Rational rat, Rational irr, int d = 5)
      : rat_(std::move(rat)), irr_(std::move(irr)), d_(checked(d)) {}

  // Pure rational value tagged with an explicit field.
  static FieldElem from_int(long v, int d) { return FieldElem(Rational(v), Rational(0), d); }
  static FieldElem sqrt_d(int d = 5) { return FieldElem(Rational(0), Rational(1), d); }
  // Accepts the textual form produced by str().
  static FieldElem parse(std::string_view text, int d = 5);

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }
  int disc() const { return d_; }

  bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
  bool is_rational() const { return irr_.is_zero(); }

  FieldElem conjugate() const { return FieldElem(rat_, -irr_, d_); }
  Rational field_norm() const; // a^2 - d b^2, zero only for zero
  FieldElem inverse() const;   // conjugate over norm

  FieldElem operator-() const { return FieldElem(-rat_, -irr_, d_); }
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    if (!a.irr_.is_zero() && !b.irr_.is_zero() && a.d_ != b.d_) return false;
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // this += a*b without temporaries on the hot integral path.
  void addmul(const FieldElem& a, const FieldElem& b);

  double to_double() const;
  std::string str() const; // "p/q" or "p/q+r/s*sqrt(d)"

private:
  static int checked(int d);
  // d of a combined value: whichever operand is genuinely irrational wins.
  static int join_d(const FieldElem& a, const FieldElem& b);

  Rational rat_, irr_;
  int d_;
};

FieldElem pow(FieldElem base, unsigned long e);
std::ostream& operator<<(std::ostream& os, const FieldElem& x);

} // namespace mforge

namespace Eigen {

// Lets Eigen dense types carry exact field scalars.
template <>
struct NumTraits<mforge::FieldElem> {
  using Real = mforge::FieldElem;
  using NonInteger = mforge::FieldElem;
  using Literal = mforge::FieldElem;
  using Nested = mforge::FieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80
  };
  static mforge::FieldElem epsilon() { return mforge::FieldElem(0); }
  static mforge::FieldElem dummy_precision() { return mforge::FieldElem(0); }
  static int digits10() { return 0; }
};

} // namespace Eigen
