#include "mforge/numfield.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace mforge {

namespace {

mpz_class parse_mpz(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  bool neg = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ParseError("dangling sign in integer literal");
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw ParseError("bad integer literal: " + std::string(text));
  mpz_class v(std::string(text.substr(i)), 10);
  return neg ? mpz_class(-v) : v;
}

} // namespace

Rational::Rational(mpz_class n, mpz_class d)
    : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw DivisionByZeroError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  mpz_class g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_mpz(text));
  return Rational(parse_mpz(text.substr(0, slash)),
                  parse_mpz(text.substr(slash + 1)));
}

Rational Rational::operator-() const { return Rational(raw_t{}, -num_, den_); }

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ -= o.num_;
    return *this;
  }
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1)
    return Rational(Rational::raw_t{}, a.num_ * b.num_, 1);
  // Cross-reduce first so intermediates stay small.
  mpz_class g1 = gcd(a.num_, b.den_);
  mpz_class g2 = gcd(b.num_, a.den_);
  return Rational(Rational::raw_t{}, (a.num_ / g1) * (b.num_ / g2),
                  (a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DivisionByZeroError("rational division by zero");
  Rational inv(Rational::raw_t{}, b.den_, b.num_);
  if (sgn(inv.den_) < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return a * inv;
}

Rational& Rational::operator*=(const Rational& o) { return *this = *this * o; }
Rational& Rational::operator/=(const Rational& o) { return *this = *this / o; }

bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

void Rational::addmul(const Rational& a, const Rational& b) {
  if (den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    mpz_addmul(num_.get_mpz_t(), a.num_.get_mpz_t(), b.num_.get_mpz_t());
    return;
  }
  *this += a * b;
}

void Rational::addmul_scaled(const Rational& a, const Rational& b, long scale) {
  if (den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    mpz_class t = a.num_ * b.num_;
    t *= scale;
    num_ += t;
    return;
  }
  *this += a * b * Rational(scale);
}

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

std::string Rational::str() const {
  return num_.get_str() + "/" + den_.get_str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

int FieldElem::checked(int d) {
  if (d < 2) throw UsageError("field discriminant must be >= 2");
  for (int p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0)
      throw UsageError("field discriminant must be squarefree");
  return d;
}

int FieldElem::join_d(const FieldElem& a, const FieldElem& b) {
  if (a.irr_.is_zero()) return b.irr_.is_zero() ? a.d_ : b.d_;
  if (!b.irr_.is_zero() && a.d_ != b.d_)
    throw FieldMismatchError("mixing sqrt(" + std::to_string(a.d_) +
                             ") and sqrt(" + std::to_string(b.d_) + ")");
  return a.d_;
}

Rational FieldElem::field_norm() const {
  return rat_ * rat_ - Rational(d_) * irr_ * irr_;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero field element");
  // 1/(a+b sqrt d) = (a-b sqrt d)/(a^2-d b^2); the norm of a nonzero element
  // is nonzero because d is squarefree.
  Rational n = field_norm();
  return FieldElem(rat_ / n, -irr_ / n, d_);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  d_ = join_d(*this, o);
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  d_ = join_d(*this, o);
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  int d = FieldElem::join_d(a, b);
  return FieldElem(a.rat_ * b.rat_ + Rational(d) * a.irr_ * b.irr_,
                   a.rat_ * b.irr_ + a.irr_ * b.rat_, d);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  FieldElem::join_d(a, b);
  return a * b.inverse();
}

void FieldElem::addmul(const FieldElem& a, const FieldElem& b) {
  int dp = join_d(a, b);
  bool product_rational = a.irr_.is_zero() && b.irr_.is_zero();
  if (irr_.is_zero()) {
    if (!product_rational) d_ = dp;
  } else if (!product_rational && d_ != dp) {
    *this += a * b; // throws iff the product really lives in another field
    return;
  }
  rat_.addmul(a.rat_, b.rat_);
  rat_.addmul_scaled(a.irr_, b.irr_, dp);
  irr_.addmul(a.rat_, b.irr_);
  irr_.addmul(a.irr_, b.rat_);
}

double FieldElem::to_double() const {
  return rat_.to_double() + irr_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string FieldElem::str() const {
  if (irr_.is_zero()) return rat_.str();
  std::string out = rat_.str();
  out += irr_.sign() < 0 ? "-" : "+";
  out += abs(irr_).str();
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

FieldElem FieldElem::parse(std::string_view text, int d) {
  auto star = text.find("*sqrt(");
  if (star == std::string_view::npos) {
    return FieldElem(Rational::parse(text), Rational(0), d);
  }
  if (text.back() != ')') throw ParseError("unterminated sqrt()");
  std::string_view dpart = text.substr(star + 6, text.size() - star - 7);
  long dval = std::stol(std::string(dpart));
  std::string_view head = text.substr(0, star);
  // Split head at the sign that separates the rational and sqrt parts:
  // the last '+' or '-' not in position 0.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos)
    return FieldElem(Rational(0), Rational::parse(head), static_cast<int>(dval));
  Rational rat = Rational::parse(head.substr(0, split));
  Rational irr = Rational::parse(head.substr(split + 1));
  if (head[split] == '-') irr = -irr;
  return FieldElem(rat, irr, static_cast<int>(dval));
}

FieldElem pow(FieldElem base, unsigned long e) {
  FieldElem out = FieldElem::from_int(1, base.disc());
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
  return os << x.str();
}

} // namespace mforge
