#ifndef DSM_TRIANGLE_HPP_
#define DSM_TRIANGLE_HPP_

#include "dsm/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dsm {

/// Barycentric coordinates (x, y) of a point of the trace-1 slice of
/// the symmetric 3x3 doubly stochastic polytope: the matrix is
/// x*X + y*Y + (1-x-y)*Z over the vertex transpositions X, Y, Z.
/// Domain D: x, y >= 0 and x + y <= 1.
struct TriPoint {
  Rational x, y;
  friend bool operator==(const TriPoint&, const TriPoint&) = default;
};

bool in_domain(const TriPoint& p);

/// The spectral level function f(x,y) = 3x^2 + 3y^2 + 3xy + 1 - 3x - 3y;
/// the non-unit eigenvalues of the slice matrix are +-sqrt(f).
Rational tri_f(const TriPoint& p);

ExactMatrix tri_to_matrix(const TriPoint& p);

/// Exact eigenvalues {1, +sqrt(f), -sqrt(f)}; the radical collapses to
/// a rational whenever f is a perfect square.
std::array<QuadScalar, 3> tri_eigenvalues(const TriPoint& p);

struct FExtrema {
  TriPoint interior_critical;  // unique stationary point inside D
  Rational interior_value;
  std::vector<std::pair<TriPoint, Rational>> boundary_critical;  // stationary on edges
  std::vector<std::pair<TriPoint, Rational>> corner_values;
  Rational grid_min, grid_max;  // cross-check over a rational grid
};

/// Re-derives the extrema of f exactly: solves the interior critical
/// system and the three boundary restrictions, then cross-checks
/// min/max on a (grid x grid) rational grid over D.
FExtrema f_extrema(int grid = 201);

enum class SliceCenter { Identity, C };

struct SliceLift {
  SliceCenter center;
  Rational t;           // slice_matrix = (1-t)*center + t*M
  bool identity_input;  // M = I_3: projected to J_3 by convention
};

/// Central projection of a symmetric doubly stochastic 3x3 matrix of
/// trace a onto the trace-1 slice: through I_3 for a >= 1 (t = 2/(3-a)),
/// through C_3 for a <= 1 (t = 1/a). The lift data inverts the
/// projection exactly. a = 0 (forcing M = C_3) is rejected; a = 3
/// (forcing M = I_3) maps to J_3 by convention.
std::pair<TriPoint, SliceLift> project_to_slice1(const ExactMatrix& m);

/// Inverse of project_to_slice1 on the slice matrix.
ExactMatrix unlift(const ExactMatrix& slice_matrix, const SliceLift& lift);

enum class Segment3 { IX, IY, IZ, CX, CY, CZ, IC };
std::string segment_name(Segment3 s);
std::pair<ExactMatrix, ExactMatrix> segment_endpoints(Segment3 s);

struct Classification3 {
  /// Present iff the matrix lies on one of the seven closed segments
  /// (then it is determined by its spectra); t measured from the
  /// first-named endpoint.
  std::optional<std::pair<Segment3, Rational>> segment;
  Rational trace;
  TriPoint slice_point;  // (1/3,1/3) by convention for the two apexes
  /// Parameter d of the slice projection along a [J_3, vertex] ray,
  /// when it lies on one: slice matrix = d*vertex + (1-d)*J_3.
  std::optional<QuadScalar> ray_param;
};

/// Membership test against the seven segments whose points are exactly
/// the 3x3 symmetric doubly stochastic matrices determined by their
/// spectra; everything else admits a cospectral mate (see mate_for).
Classification3 classify3(const ExactMatrix& m);

/// A cospectral, non-permutation-similar symmetric doubly stochastic
/// mate for a matrix classified off the seven segments. Exact by
/// construction and re-verified before returning.
ExactMatrix mate_for(const ExactMatrix& m);

/// Rational points of D on the level conic f = d^2, generated by
/// rational chords through the rational pivot ((1-d)/3, (1-d)/3) (or
/// the (1+d)/3 twin when needed); slopes enumerated in Stern-Brocot
/// order for determinism. May return fewer than `count`.
std::vector<TriPoint> level_curve_points(const Rational& d, int count);

/// The classical sufficient-condition expression
/// 1/n + lambda_2/(n(n-1)) + ... + lambda_n/(2*1), exact.
/// Input sorted descending with lambda_1 = 1 and |lambda_i| <= 1.
Rational hw_inequality(const std::vector<Rational>& lambda);

}  // namespace dsm

#endif  // DSM_TRIANGLE_HPP_
