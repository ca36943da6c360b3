#ifndef DSM_JACOBI_HPP_
#define DSM_JACOBI_HPP_

#include "dsm/matrix.hpp"

#include <vector>

namespace dsm {

struct NumericSpectrum {
  std::vector<double> values;  // sorted descending
  double residual_bound;
};

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations on
/// the double-converted entries. Iterates until the off-diagonal
/// Frobenius norm is <= 1e-12 (at most 100 sweeps; throws
/// std::runtime_error if that fails). Validation-only: never feeds an
/// exact verdict.
NumericSpectrum eigenvalues_symmetric(const ExactMatrix& m);

/// Raw kernel on a dense row-major n x n symmetric array. When
/// `vectors` is non-null it accumulates the rotations so that
/// a_in = V diag(values) V^T with V's columns the eigenvectors.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n,
                                       std::vector<double>* vectors,
                                       double* off_norm_out);

}  // namespace dsm

#endif  // DSM_JACOBI_HPP_
