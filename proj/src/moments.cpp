#include "mforge/moments.hpp"

#include <algorithm>
#include <set>

#include "mforge/error.hpp"
#include "mforge/parallel.hpp"

namespace mforge {

FieldElem moment(const LaurentPoly& L, const LaurentPoly& Q, long i) {
  if (i < 1) throw UsageError("moment index must be >= 1");
  return residue(pow(L, static_cast<unsigned long>(i)) * derivative(Q));
}

long verification_bound(const LaurentPoly& Q, long N) {
  if (N < 1) throw UsageError("orbit size must be >= 1");
  return (N - 1) * Q.degree_span() + 1;
}

PowerScanner::PowerScanner(const LaurentPoly& L) {
  if (L.is_zero()) throw UsageError("cannot scan powers of the zero polynomial");
  mpz_class d_lcm = 1;
  for (const auto& [k, c] : L.terms()) {
    mpz_class l1 = lcm(d_lcm, c.rat().denominator());
    d_lcm = lcm(l1, c.irr().denominator());
  }
  scale_factor_ = Rational(d_lcm);
  descale_ = scale_factor_;
  base_min_ = L.min_degree();
  base_.assign(static_cast<std::size_t>(L.degree_span()) + 1, FieldElem());
  for (const auto& [k, c] : L.terms())
    base_[static_cast<std::size_t>(k - base_min_)] = FieldElem(scale_factor_) * c;
  cur_ = base_;
  cur_min_ = base_min_;
}

void PowerScanner::advance() {
  std::size_t out_size = cur_.size() + base_.size() - 1;
  std::vector<FieldElem> out(out_size, FieldElem());
  parallel_for_chunks(out_size, 2048, [&](std::size_t begin, std::size_t end) {
    for (std::size_t o = begin; o < end; ++o) {
      FieldElem& acc = out[o];
      std::size_t t_lo = o >= cur_.size() ? o - cur_.size() + 1 : 0;
      std::size_t t_hi = std::min(o, base_.size() - 1);
      for (std::size_t t = t_lo; t <= t_hi; ++t) acc.addmul(base_[t], cur_[o - t]);
    }
  });
  cur_ = std::move(out);
  cur_min_ += base_min_;
  descale_ *= scale_factor_;
  ++expo_;
}

FieldElem PowerScanner::coefficient(long degree) const {
  long idx = degree - cur_min_;
  if (idx < 0 || idx >= static_cast<long>(cur_.size())) return FieldElem();
  const FieldElem& c = cur_[static_cast<std::size_t>(idx)];
  return FieldElem(c.rat() / descale_, c.irr() / descale_, c.disc());
}

FieldElem PowerScanner::residue_times(const LaurentPoly& g) const {
  FieldElem acc;
  for (const auto& [k, c] : g.terms()) {
    long idx = -1 - k - cur_min_;
    if (idx < 0 || idx >= static_cast<long>(cur_.size())) continue;
    acc.addmul(c, cur_[static_cast<std::size_t>(idx)]);
  }
  if (acc.is_zero()) return acc;
  return FieldElem(acc.rat() / descale_, acc.irr() / descale_, acc.disc());
}

MomentReport verify_solution(const LaurentPoly& L, const LaurentPoly& Q, long N,
                             bool full_scan) {
  return verify_solutions(L, {Q}, N, full_scan).front();
}

std::vector<MomentReport> verify_solutions(const LaurentPoly& L,
                                           const std::vector<LaurentPoly>& Qs,
                                           long N, bool full_scan) {
  std::vector<MomentReport> reports(Qs.size());
  std::vector<LaurentPoly> dq(Qs.size());
  long max_bound = 0;
  for (std::size_t q = 0; q < Qs.size(); ++q) {
    reports[q].checked_upper_bound = verification_bound(Qs[q], N);
    dq[q] = derivative(Qs[q]);
    max_bound = std::max(max_bound, reports[q].checked_upper_bound);
  }
  PowerScanner scanner(L);
  for (long i = 1; i <= max_bound; ++i) {
    bool later_needed = false;
    for (std::size_t q = 0; q < Qs.size(); ++q) {
      MomentReport& rep = reports[q];
      bool active = i <= rep.checked_upper_bound && (full_scan || rep.all_zero);
      if (!active) continue;
      if (!scanner.residue_times(dq[q]).is_zero() && rep.all_zero) {
        rep.all_zero = false;
        rep.first_nonzero_index = i;
      }
      if (i < rep.checked_upper_bound && (full_scan || rep.all_zero))
        later_needed = true;
    }
    if (!later_needed || i == max_bound) break;
    scanner.advance();
  }
  return reports;
}

long orbit_size(const std::vector<Permutation>& generators,
                const std::vector<int>& v) {
  if (generators.empty()) throw UsageError("empty generator list");
  for (const auto& g : generators)
    if (g.degree() != static_cast<int>(v.size()))
      throw UsageError("generator degree does not match vector length");
  std::set<std::vector<int>> seen{v};
  std::vector<std::vector<int>> stack{v};
  while (!stack.empty()) {
    std::vector<int> cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& g : generators) {
      std::vector<int> next(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i)
        next[static_cast<std::size_t>(g.apply(static_cast<int>(i)))] = cur[i];
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return static_cast<long>(seen.size());
}

MatrixF polynomial_moment_matrix(const LaurentPoly& L, int max_degree, long rows) {
  MatrixF m(rows, max_degree);
  PowerScanner scanner(L);
  for (long i = 1; i <= rows; ++i) {
    for (int k = 1; k <= max_degree; ++k)
      m(i - 1, k - 1) = FieldElem(k) * scanner.coefficient(-k);
    if (i < rows) scanner.advance();
  }
  return m;
}

} // namespace mforge
