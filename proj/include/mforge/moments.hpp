#pragma once

#include <optional>
#include <vector>

#include "mforge/laurent.hpp"
#include "mforge/linalg.hpp"
#include "mforge/perm.hpp"

namespace mforge {

/// Outcome of checking moments of one candidate solution up to the finite
/// bound that suffices for all i.
struct MomentReport {
  long checked_upper_bound = 0;
  std::optional<long> first_nonzero_index;
  bool all_zero = true;
};

// i-th moment of Q against L around the unit circle, up to the 2*pi*i
// factor: the z^-1 coefficient of L^i * Q'.
FieldElem moment(const LaurentPoly& L, const LaurentPoly& Q, long i);

// (N-1)*(max_degree - min_degree of Q) + 1; constants get bound 1.
long verification_bound(const LaurentPoly& Q, long N);

/// Streams the powers L^1, L^2, ... of a fixed Laurent polynomial, exposing
/// exact coefficients of the current power. Internally works with the
/// integer rescaling D*L (D = lcm of coefficient denominators) so the long
/// convolutions run over denominator-free rationals.
class PowerScanner {
public:
  explicit PowerScanner(const LaurentPoly& L);

  long exponent() const { return expo_; }
  void advance(); // exponent += 1

  // Coefficient of z^degree in L^exponent.
  FieldElem coefficient(long degree) const;
  // residue(L^exponent * g) for sparse g.
  FieldElem residue_times(const LaurentPoly& g) const;

private:
  std::vector<FieldElem> base_;
  long base_min_ = 0;
  std::vector<FieldElem> cur_;
  long cur_min_ = 0;
  Rational scale_factor_; // D
  Rational descale_;      // D^exponent
  long expo_ = 1;
};

// Checks moment(L, Q, i) = 0 for all 1 <= i <= verification_bound(Q, N);
// stops at the first nonzero moment unless full_scan is set.
MomentReport verify_solution(const LaurentPoly& L, const LaurentPoly& Q, long N,
                             bool full_scan = false);

// Same check for many candidates over a single power sweep.
std::vector<MomentReport> verify_solutions(const LaurentPoly& L,
                                           const std::vector<LaurentPoly>& Qs,
                                           long N, bool full_scan = false);

// Size of the orbit of an integer vector under the group generated by the
// given permutations acting on coordinates (breadth-first closure).
long orbit_size(const std::vector<Permutation>& generators,
                const std::vector<int>& v);

// rows x max_degree matrix whose (i, k) entry is moment(L, z^(k+1), i+1);
// full column rank means no nonconstant ordinary polynomial of degree up to
// max_degree satisfies the first `rows` moment conditions.
MatrixF polynomial_moment_matrix(const LaurentPoly& L, int max_degree, long rows);

} // namespace mforge
