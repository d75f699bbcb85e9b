#pragma once

#include <vector>

#include "mforge/belyi.hpp"
#include "mforge/laurent.hpp"
#include "mforge/perm.hpp"

namespace mforge::builtin {

// Coefficients of the degree-10 Laurent polynomial under study:
// L = K (z-1)^6 (z-a)^3 (z-b) / z^5 over Q(sqrt 5).
const FieldElem& coeff_K();
const FieldElem& coeff_a();
const FieldElem& coeff_b();
const LaurentPoly& L();

// The two rational candidates with the same fiber structure.
const RationalFunction& F1(); // 50000/27 x^6 (x-1)^3 (x+1) / (x^2+4x-1)^5
const RationalFunction& F2(); // 337500 x^6 (x-1)^3 (x+1) / (11x^2+4x-16)^5

// Coordinate change carrying F1 to L: z = ((2-sqrt5)x - 1)/((2+sqrt5)x - 1)
// moves the two poles to 0 and infinity; x_from_z() is its inverse.
Mobius z_from_x();
Mobius x_from_z();

// Vertex permutations of K5 and their induced edge permutations.
const Permutation& vertex_f(); // (1,2,3,4,5)
const Permutation& vertex_a(); // (2,5)
const Permutation& vertex_s(); // (1,2)(3,5,4)
const Permutation& phi();      // edge action of vertex_f
const Permutation& alpha();    // edge action of vertex_a
const Permutation& sigma();    // edge action of vertex_s
std::vector<Permutation> monodromy_generators(); // {sigma, alpha, phi}

// +1 on the pentagon edges, -1 on the pentagram edges; the vector whose
// orbit size feeds the finite moment bound.
std::vector<int> sign_split_vector();

// Printed spanning vectors: the five fans and the six signed Hamiltonian
// cycles (chosen so the six sum to zero).
const std::vector<VectorF>& fans();
const std::vector<VectorF>& hamiltonians();

// The three fiber partitions shared by F1, F2 and L.
const Partition& black_partition(); // (6,3,1)
const Partition& white_partition(); // (2,2,2,1,1,1,1)
const Partition& face_partition();  // (5,5)

} // namespace mforge::builtin
