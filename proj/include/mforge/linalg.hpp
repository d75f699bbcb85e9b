#pragma once

#include <Eigen/Core>
#include <vector>

#include "mforge/error.hpp"
#include "mforge/numfield.hpp"

namespace mforge {

using MatrixF = Eigen::Matrix<FieldElem, Eigen::Dynamic, Eigen::Dynamic>;
using VectorF = Eigen::Matrix<FieldElem, Eigen::Dynamic, 1>;

// Row-reduced echelon form computed in place with exact arithmetic.
// Pivot rule: first nonzero entry in column order, so intermediate states
// are deterministic. Returns the pivot columns.
inline std::vector<Eigen::Index> rref_in_place(MatrixF& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    FieldElem inv = m(row, col).inverse();
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) = inv * m(row, c);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      FieldElem factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline Eigen::Index row_rank(MatrixF m) {
  return static_cast<Eigen::Index>(rref_in_place(m).size());
}

// Reduces v against an RREF basis; the residual is zero iff v lies in the
// row space.
inline VectorF reduce_against(const MatrixF& rref,
                              const std::vector<Eigen::Index>& pivots, VectorF v) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const FieldElem c = v(pivots[i]); // copy: the loop below overwrites it
    if (c.is_zero()) continue;
    for (Eigen::Index j = 0; j < v.size(); ++j)
      v(j) -= c * rref(static_cast<Eigen::Index>(i), j);
  }
  return v;
}

inline bool is_zero_vector(const VectorF& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

// Exact solve of a square system; SingularMatrixError if the matrix is
// singular. Pivoting picks the first nonzero entry in column order.
inline VectorF gauss_solve(MatrixF a, VectorF b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw UsageError("gauss_solve expects a square system");
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!a(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) throw SingularMatrixError("singular system in exact solve");
    if (p != col) {
      a.row(p).swap(a.row(col));
      std::swap(b(p), b(col));
    }
    FieldElem inv = a(col, col).inverse();
    for (Eigen::Index c = col; c < n; ++c) a(col, c) = inv * a(col, c);
    b(col) = inv * b(col);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      FieldElem factor = a(r, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b(r) -= factor * b(col);
    }
  }
  return b;
}

} // namespace mforge
