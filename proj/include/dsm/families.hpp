#ifndef DSM_FAMILIES_HPP_
#define DSM_FAMILIES_HPP_

#include "dsm/matrix.hpp"

#include <span>
#include <vector>

namespace dsm {

// Named elements of the symmetric doubly stochastic polytope.
ExactMatrix mat_identity(int n);
/// J_n: every entry 1/n.
ExactMatrix mat_J(int n);
/// C_n: zero diagonal, off-diagonal entries 1/(n-1). Requires n >= 2.
ExactMatrix mat_C(int n);
/// The three symmetric transposition vertices of the 3x3 trace-1 slice.
ExactMatrix vertex_X();
ExactMatrix vertex_Y();
ExactMatrix vertex_Z();
/// Permutation matrix of sigma in one-based image notation
/// (perm[i] = sigma(i+1)).
ExactMatrix permutation_matrix(const std::vector<int>& perm);
/// The trace-a point D_a on the segment [I_n, C_n], 0 <= a <= n:
/// D_a = a*J_n + (1-a)*C_n for a <= 1 and
/// D_a = ((a-1)/(n-1))*I_n + (1-(a-1)/(n-1))*J_n for a >= 1.
ExactMatrix trace_point(int n, const Rational& a);
/// 2m x 2m zero-diagonal-block forms [[0, K],[K, 0]] for K = I_m, J_m, C_m.
ExactMatrix block_identity(int m);
ExactMatrix block_J(int m);
ExactMatrix block_C(int m);

/// (1-t)*A + t*B for t in [0,1].
ExactMatrix segment_point(const ExactMatrix& a, const ExactMatrix& b, const Rational& t);

ExactMatrix direct_sum(std::span<const ExactMatrix> blocks);
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

/// [[0, J_n],[A, 0]] for doubly stochastic A.
ExactMatrix block_bipartite(const ExactMatrix& a);

struct Component {
  std::vector<int> indices;  // ascending original indices
  ExactMatrix block;         // principal submatrix on those indices
};

/// Splits a doubly stochastic matrix into its irreducible diagonal
/// blocks (components of the support graph; for doubly stochastic
/// matrices the directed and undirected notions coincide).
std::vector<Component> irreducible_components(const ExactMatrix& m);

struct Imprimitivity {
  int k;                                  // number of unit-modulus eigenvalues
  std::vector<std::vector<int>> classes;  // cyclic vertex partition when k > 1
};

/// Period of an irreducible doubly stochastic matrix: gcd of directed
/// support-cycle lengths. Throws std::invalid_argument for reducible input.
Imprimitivity imprimitivity_index(const ExactMatrix& m);

/// Exact inverse via Gaussian elimination over the entry field.
/// Throws std::domain_error when singular.
ExactMatrix inverse(const ExactMatrix& m);

/// Exact determinant over the entry field.
QuadScalar determinant(const ExactMatrix& m);

/// Exact rank over the entry field.
int rank(const ExactMatrix& m);

}  // namespace dsm

#endif  // DSM_FAMILIES_HPP_
