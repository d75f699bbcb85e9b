#include "mforge/basis.hpp"

#include "mforge/error.hpp"
#include "mforge/moments.hpp"

namespace mforge {

LinearSystem build_qj_system(const LaurentPoly& L, int j) {
  if (j < 1 || j > 4) throw UsageError("basis index must be in 1..4");
  LinearSystem sys;
  sys.matrix = MatrixF(j, j);
  sys.rhs = VectorF(j);
  PowerScanner scanner(L);
  for (int i = 1; i <= j; ++i) {
    // residue(L^i d/dz(z^k)) = k * [z^-k] L^i for the unknowns, and the
    // fixed z^-j term contributes -j * [z^j] L^i moved across the equality.
    for (int k = 1; k <= j; ++k)
      sys.matrix(i - 1, k - 1) = FieldElem(k) * scanner.coefficient(-k);
    sys.rhs(i - 1) = FieldElem(j) * scanner.coefficient(j);
    if (i < j) scanner.advance();
  }
  return sys;
}

VectorF gauss_solve(const LinearSystem& sys) {
  return gauss_solve(sys.matrix, sys.rhs);
}

std::vector<LaurentPoly> solve_basis(const LaurentPoly& L) {
  std::vector<LaurentPoly> basis;
  basis.push_back(LaurentPoly::constant(FieldElem(1)));
  for (int j = 1; j <= 4; ++j) {
    VectorF s = gauss_solve(build_qj_system(L, j));
    LaurentPoly qj = LaurentPoly::monomial(-j, FieldElem(1));
    for (int k = 1; k <= j; ++k) qj.set_coeff(k, s(k - 1));
    MomentReport report = verify_solution(L, qj, 12);
    if (!report.all_zero)
      throw Error("solved basis element failed full moment verification at i=" +
                  std::to_string(*report.first_nonzero_index));
    basis.push_back(std::move(qj));
  }
  return basis;
}

} // namespace mforge
