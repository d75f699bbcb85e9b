#include "mforge/decompose.hpp"

#include "mforge/error.hpp"

namespace mforge {

std::pair<long, int> min_degree_split(long m) {
  if (m > 0) throw UsageError("minimal degree must be <= 0 to split");
  long k = (-m) / 5;
  int j = static_cast<int>((-m) % 5);
  return {k, j};
}

namespace {

void check_inputs(const LaurentPoly& L, const std::vector<LaurentPoly>& basis) {
  if (L.is_zero() || L.min_degree() != -5)
    throw UsageError("decomposition expects a Laurent polynomial with a pole of order 5");
  if (basis.size() != 5) throw UsageError("decomposition expects a 5-element basis");
  if (basis[0] != LaurentPoly::constant(FieldElem(1)))
    throw UsageError("basis must start with the constant 1");
  for (int j = 1; j <= 4; ++j)
    if (basis[static_cast<std::size_t>(j)].is_zero() ||
        basis[static_cast<std::size_t>(j)].min_degree() != -j)
      throw UsageError("basis element " + std::to_string(j) +
                       " must have minimal degree " + std::to_string(-j));
}

} // namespace

Decomposition decompose(const LaurentPoly& Q, const LaurentPoly& L,
                        const std::vector<LaurentPoly>& basis) {
  check_inputs(L, basis);
  Decomposition out;
  LaurentPoly cur = Q;
  std::vector<LaurentPoly> lpow{LaurentPoly::constant(FieldElem(1))};
  while (!cur.is_zero() && cur.min_degree() < 0) {
    long m = cur.min_degree();
    auto [k, j] = min_degree_split(m);
    while (static_cast<long>(lpow.size()) <= k) lpow.push_back(lpow.back() * L);
    LaurentPoly step = lpow[static_cast<std::size_t>(k)] * basis[static_cast<std::size_t>(j)];
    FieldElem c = cur.coeff(m) / step.coeff(m);
    out.r_polys[static_cast<std::size_t>(j)] +=
        Polynomial::monomial(static_cast<unsigned long>(k), c);
    cur -= c * step;
    if (!cur.is_zero() && cur.min_degree() <= m)
      throw Error("reduction failed to raise the minimal degree");
  }
  if (cur.is_constant()) {
    // Fold the surviving constant into R_0.
    if (!cur.is_zero())
      out.r_polys[0] += Polynomial::constant(cur.coeff(0));
  } else {
    out.remainder = to_polynomial(cur);
  }
  return out;
}

LaurentPoly reconstruct(const std::array<Polynomial, 5>& r,
                        const std::vector<LaurentPoly>& basis,
                        const LaurentPoly& L) {
  check_inputs(L, basis);
  LaurentPoly out;
  for (std::size_t j = 0; j < 5; ++j)
    out += compose(r[j], L) * basis[j];
  return out;
}

Classification classify(const LaurentPoly& Q, const LaurentPoly& L,
                        const std::vector<LaurentPoly>& basis, long N) {
  Classification result;
  result.decomposition = decompose(Q, L, basis);
  result.report = verify_solution(L, Q, N);
  result.is_solution =
      result.decomposition.remainder.is_zero() && result.report.all_zero;
  return result;
}

} // namespace mforge
