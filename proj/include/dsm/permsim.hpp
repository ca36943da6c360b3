#ifndef DSM_PERMSIM_HPP_
#define DSM_PERMSIM_HPP_

#include "dsm/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dsm {

/// All n^2 entries in ascending exact order. Unequal multisets certify
/// that two matrices are not permutationally similar (at any n).
std::vector<QuadScalar> entry_multiset(const ExactMatrix& m);
std::vector<QuadScalar> diagonal_multiset(const ExactMatrix& m);

struct PermWitness {
  /// sigma in one-based image notation; applying it to A yields B.
  std::optional<std::vector<int>> perm;
  /// which prefilter separated the pair, or "exhausted search"
  std::string invariant_report;
};

/// B[sigma(i)][sigma(j)] = A[i][j] with sigma zero-based from the
/// one-based witness notation.
ExactMatrix apply_perm(const ExactMatrix& a, const std::vector<int>& perm);

/// Decides B = P^T A P by class-pruned backtracking, exact throughout.
/// Hard dimension budget n <= 12.
PermWitness are_perm_similar(const ExactMatrix& a, const ExactMatrix& b);

/// Lexicographically minimal (row-major entry order) conjugate
/// P^T M P over all permutations. Two matrices are permutationally
/// similar iff their canonical forms coincide. Budget n <= 12.
ExactMatrix canonical_form(const ExactMatrix& m);

std::string perm_to_string(const std::vector<int>& perm);
std::vector<int> perm_from_string(const std::string& s);

}  // namespace dsm

#endif  // DSM_PERMSIM_HPP_
