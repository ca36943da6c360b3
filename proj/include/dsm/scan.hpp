#ifndef DSM_SCAN_HPP_
#define DSM_SCAN_HPP_

#include "dsm/matrix.hpp"
#include "dsm/triangle.hpp"

#include <vector>

namespace dsm {

// Grid kernels over the barycentric domain D. Each kernel has an
// OpenMP-parallel implementation and a serial reference; the two must
// produce identical results (the aggregations are order-independent),
// which the test suite checks and the bench tool times.

struct GridDeviation {
  double max_deviation;  // worst |exact eigenvalue - numeric eigenvalue|
  long points;
};

/// Componentwise agreement between the exact slice eigenvalues
/// {1, +-sqrt(f)} and the numeric Jacobi eigensolver over a
/// (grid x grid) rational grid of D.
GridDeviation triangle_grid_deviation(int grid);
GridDeviation triangle_grid_deviation_serial(int grid);

struct FRange {
  Rational min, max;
};

/// Exact min/max of f over the grid.
FRange f_grid_range(int grid);
FRange f_grid_range_serial(int grid);

struct SliceScanHit {
  TriPoint point;        // slice coordinates of the cospectral grid point
  bool perm_similar;     // permutation-similar to the target?
};

/// Brute-force scan of the trace-a slice of the symmetric 3x3 doubly
/// stochastic polytope for grid points exactly cospectral with
/// `target` (a symmetric doubly stochastic 3x3 matrix of the same
/// trace). Hits are reported in row-major grid order.
std::vector<SliceScanHit> slice_cospectral_scan(const ExactMatrix& target, int grid);
std::vector<SliceScanHit> slice_cospectral_scan_serial(const ExactMatrix& target, int grid);

}  // namespace dsm

#endif  // DSM_SCAN_HPP_
