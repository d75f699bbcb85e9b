#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "mforge/laurent.hpp"
#include "mforge/moments.hpp"

namespace mforge {

/// Result of the greedy reduction Q = sum_j (R_j o L) * Q_j + remainder.
/// For genuine solutions the remainder is zero: constants are folded into
/// the degree-0 coefficient of R_0.
struct Decomposition {
  std::array<Polynomial, 5> r_polys;
  Polynomial remainder;
};

// Unique (k, j) with m = -5k - j, k >= 0, 0 <= j <= 4; UsageError for m > 0.
std::pair<long, int> min_degree_split(long m);

// Greedy reduction against the basis: while the minimal degree is negative,
// cancel it with the matching c * L^k * Q_j. Total on every input; the
// remainder witnesses non-solutions. Requires min_degree(L) = -5 and a
// five-element basis.
Decomposition decompose(const LaurentPoly& Q, const LaurentPoly& L,
                        const std::vector<LaurentPoly>& basis);

// sum_j (r[j] o L) * basis[j].
LaurentPoly reconstruct(const std::array<Polynomial, 5>& r,
                        const std::vector<LaurentPoly>& basis,
                        const LaurentPoly& L);

struct Classification {
  bool is_solution = false;
  Decomposition decomposition;
  MomentReport report;
};

// Decomposes Q and separately confirms the moment conditions; a solution
// must have zero remainder and a fully vanishing moment report.
Classification classify(const LaurentPoly& Q, const LaurentPoly& L,
                        const std::vector<LaurentPoly>& basis, long N = 12);

} // namespace mforge
