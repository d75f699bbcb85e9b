#pragma once

#include <gmpxx.h>

#include <vector>

#include "mforge/partition.hpp"
#include "mforge/perm.hpp"

namespace mforge {

// Irreducible symmetric-group character value chi_lambda(mu), evaluated by
// recursive border-strip removal (Murnaghan-Nakayama). Exact; memoized per
// call, safe to run concurrently.
long long mn_character(const Partition& lambda, const Partition& mu);

mpz_class factorial(int n);

// Size of the conjugacy class of S_n with cycle type mu: n!/z_mu.
mpz_class class_size(const Partition& mu);

// Permutation with the given cycle type, cycles filled with 1..n in order.
Permutation class_representative(const Partition& mu);

// Number of k-tuples (x_1,...,x_k), x_i in the class of cycle type
// classes[i], with x_1 x_2 ... x_k = 1 (character sum over all irreducibles
// of S_n). Asserts that the sum comes out a nonnegative integer.
mpz_class frobenius_count(int n, const std::vector<Partition>& classes);

struct CharacterMultiplicity {
  Partition lambda;
  long multiplicity;
};

// Multiplicities <pi, chi_lambda> of the edge action of S5 on the ten edges
// of K5, one entry per partition of 5 in enumeration order.
std::vector<CharacterMultiplicity> edge_action_character_multiplicities(
    const EdgeLabeling& lab);

// <pi, pi> for the same action: the number of irreducible constituents
// counted with multiplicity squared.
long edge_action_character_self_product(const EdgeLabeling& lab);

} // namespace mforge
