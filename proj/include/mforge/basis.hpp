#pragma once

#include <vector>

#include "mforge/laurent.hpp"
#include "mforge/linalg.hpp"

namespace mforge {

/// Square exact system A s = rhs for the unknown top coefficients of one
/// basis solution.
struct LinearSystem {
  MatrixF matrix;
  VectorF rhs;
};

// System for Q_j = z^-j + s_1 z + ... + s_j z^j, j in 1..4: row i encodes
// the vanishing of the i-th moment; the fixed z^-j term supplies the right
// hand side.
LinearSystem build_qj_system(const LaurentPoly& L, int j);

// Exact elimination with first-nonzero pivoting; SingularMatrixError if the
// system degenerates.
VectorF gauss_solve(const LinearSystem& sys);

// Q_0 = 1 and the four normalized basis solutions Q_1..Q_4; each result is
// re-verified against the finite moment bound with N = 12 before returning.
std::vector<LaurentPoly> solve_basis(const LaurentPoly& L);

} // namespace mforge
