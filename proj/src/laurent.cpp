#include "mforge/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "mforge/error.hpp"

namespace mforge {

LaurentPoly LaurentPoly::constant(FieldElem c) { return monomial(0, std::move(c)); }

LaurentPoly LaurentPoly::monomial(long k, FieldElem c) {
  LaurentPoly f;
  if (!c.is_zero()) f.coeffs_.emplace(k, std::move(c));
  return f;
}

bool LaurentPoly::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

long LaurentPoly::min_degree() const {
  if (coeffs_.empty()) throw UsageError("min_degree of the zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::max_degree() const {
  if (coeffs_.empty()) throw UsageError("max_degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

long LaurentPoly::degree_span() const {
  return coeffs_.empty() ? 0 : max_degree() - min_degree();
}

FieldElem LaurentPoly::coeff(long k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? FieldElem() : it->second;
}

void LaurentPoly::set_coeff(long k, FieldElem c) {
  if (c.is_zero())
    coeffs_.erase(k);
  else
    coeffs_[k] = std::move(c);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.coeffs_) {
    auto [it, fresh] = coeffs_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.coeffs_) {
    auto [it, fresh] = coeffs_.try_emplace(k, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) {
      FieldElem t = ca * cb;
      auto [it, fresh] = out.coeffs_.try_emplace(ka + kb, t);
      if (!fresh) it->second += t;
    }
  std::erase_if(out.coeffs_, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

LaurentPoly operator*(const FieldElem& c, const LaurentPoly& f) {
  LaurentPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : f.coeffs_) {
    FieldElem t = c * v;
    if (!t.is_zero()) out.coeffs_.emplace(k, std::move(t));
  }
  return out;
}

LaurentPoly pow(const LaurentPoly& f, unsigned long i) {
  LaurentPoly out = LaurentPoly::constant(FieldElem(1));
  LaurentPoly base = f;
  while (i > 0) {
    if (i & 1) out = out * base;
    i >>= 1;
    if (i > 0) base = base * base;
  }
  return out;
}

LaurentPoly derivative(const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [k, c] : f.terms())
    if (k != 0) out.set_coeff(k - 1, FieldElem::from_int(k, c.disc()) * c);
  return out;
}

FieldElem residue(const LaurentPoly& f) { return f.coeff(-1); }

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coeffs_) {
    if (!out.empty()) out += "+";
    out += "(" + c.str() + ")*z^" + std::to_string(k);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly out;
  if (text == "0" || text.empty()) return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in Laurent polynomial at position " +
                       std::to_string(pos));
    // The coefficient itself may contain parentheses (sqrt(d)); match depth.
    std::size_t close = pos;
    int depth = 0;
    for (; close < text.size(); ++close) {
      if (text[close] == '(') ++depth;
      if (text[close] == ')' && --depth == 0) break;
    }
    if (close == text.size()) throw ParseError("unbalanced '('");
    FieldElem c = FieldElem::parse(text.substr(pos + 1, close - pos - 1));
    if (text.substr(close + 1, 3) != "*z^")
      throw ParseError("expected '*z^' after coefficient");
    std::size_t expo_begin = close + 4;
    std::size_t expo_end = expo_begin;
    if (expo_end < text.size() && (text[expo_end] == '-' || text[expo_end] == '+'))
      ++expo_end;
    while (expo_end < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[expo_end])))
      ++expo_end;
    long k = std::stol(std::string(text.substr(expo_begin, expo_end - expo_begin)));
    auto [it, fresh] = out.coeffs_.try_emplace(k, c);
    if (!fresh) it->second += c;
    pos = expo_end;
    if (pos < text.size()) {
      if (text[pos] != '+') throw ParseError("expected '+' between terms");
      ++pos;
    }
  }
  std::erase_if(out.coeffs_, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) {
  return os << f.str();
}

Polynomial::Polynomial(std::initializer_list<FieldElem> ascending) : c_(ascending) {
  trim();
}

Polynomial::Polynomial(std::vector<FieldElem> ascending) : c_(std::move(ascending)) {
  trim();
}

Polynomial Polynomial::constant(FieldElem c) {
  Polynomial f;
  if (!c.is_zero()) f.c_.push_back(std::move(c));
  return f;
}

Polynomial Polynomial::monomial(unsigned long k, FieldElem c) {
  Polynomial f;
  if (!c.is_zero()) {
    f.c_.assign(k + 1, FieldElem::from_int(0, c.disc()));
    f.c_.back() = std::move(c);
  }
  return f;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const FieldElem& Polynomial::leading() const {
  if (c_.empty()) throw UsageError("leading coefficient of the zero polynomial");
  return c_.back();
}

FieldElem Polynomial::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : FieldElem();
}

FieldElem Polynomial::evaluate(const FieldElem& x) const {
  if (c_.empty()) return FieldElem::from_int(0, x.disc());
  FieldElem acc = c_.back();
  for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return leading().inverse() * *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldElem());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldElem());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, FieldElem());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out.c_[i + j].addmul(a.c_[i], b.c_[j]);
  out.trim();
  return out;
}

Polynomial operator*(const FieldElem& c, const Polynomial& f) {
  Polynomial out = f;
  for (auto& v : out.c_) v = c * v;
  out.trim();
  return out;
}

Polynomial derivative(const Polynomial& f) {
  const auto& c = f.coeffs();
  std::vector<FieldElem> out;
  for (std::size_t i = 1; i < c.size(); ++i)
    out.push_back(FieldElem::from_int(static_cast<long>(i), c[i].disc()) * c[i]);
  return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& f, unsigned long i) {
  Polynomial out = Polynomial::constant(FieldElem(1));
  Polynomial base = f;
  while (i > 0) {
    if (i & 1) out = out * base;
    i >>= 1;
    if (i > 0) base = base * base;
  }
  return out;
}

std::pair<Polynomial, Polynomial> div_mod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  Polynomial rem = f;
  if (f.degree() < g.degree()) return {Polynomial(), rem};
  std::vector<FieldElem> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1,
                           FieldElem());
  FieldElem lead_inv = g.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    long shift = rem.degree() - g.degree();
    FieldElem factor = rem.leading() * lead_inv;
    q[static_cast<std::size_t>(shift)] = factor;
    rem -= factor * Polynomial::monomial(static_cast<unsigned long>(shift),
                                         FieldElem(1)) *
           g;
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial div_exact(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = div_mod(f, g);
  if (!r.is_zero())
    throw NotDivisibleError("polynomial division left remainder " + r.str());
  return q;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero())
    throw UsageError("gcd(0, 0) is undefined");
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    auto [q, r] = div_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  if (f.degree() <= 0) return out;
  // Yun's algorithm, characteristic zero.
  Polynomial a = gcd(f, derivative(f));
  Polynomial b = div_exact(f, a);
  Polynomial c = div_exact(derivative(f), a);
  Polynomial d = c - derivative(b);
  int mult = 1;
  while (b.degree() > 0) {
    Polynomial p = gcd(b, d.is_zero() ? b : d);
    if (p.degree() > 0) out.emplace_back(p, mult);
    b = div_exact(b, p);
    c = div_exact(d, p);
    d = c - derivative(b);
    ++mult;
  }
  return out;
}

LaurentPoly compose(const Polynomial& R, const LaurentPoly& f) {
  LaurentPoly acc;
  const auto& c = R.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * f;
    acc += LaurentPoly::constant(c[i]);
  }
  return acc;
}

LaurentPoly to_laurent(const Polynomial& f) {
  LaurentPoly out;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) out.set_coeff(static_cast<long>(i), c[i]);
  return out;
}

Polynomial to_polynomial(const LaurentPoly& f) {
  if (f.is_zero()) return Polynomial();
  if (f.min_degree() < 0)
    throw UsageError("Laurent polynomial with a pole is not an ordinary polynomial");
  std::vector<FieldElem> c(static_cast<std::size_t>(f.max_degree()) + 1, FieldElem());
  for (const auto& [k, v] : f.terms()) c[static_cast<std::size_t>(k)] = v;
  return Polynomial(std::move(c));
}

std::string Polynomial::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += "+";
    out += "(" + c_[i].str() + ")*" + std::string(var) + "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  return os << f.str();
}

} // namespace mforge
