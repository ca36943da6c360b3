#include "dsm/scan.hpp"

#include "dsm/charpoly.hpp"
#include "dsm/families.hpp"
#include "dsm/jacobi.hpp"
#include "dsm/permsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsm {

namespace {
double point_deviation(int i, int j, int steps) {
  const TriPoint p{Rational(i, steps), Rational(j, steps)};
  const auto exact = tri_eigenvalues(p);
  std::vector<double> want{exact[0].to_double(), exact[1].to_double(), exact[2].to_double()};
  std::sort(want.begin(), want.end(), std::greater<double>());
  const NumericSpectrum got = eigenvalues_symmetric(tri_to_matrix(p));
  double dev = 0;
  for (int k = 0; k < 3; ++k) dev = std::max(dev, std::abs(want[k] - got.values[k]));
  return dev;
}
}  // namespace

GridDeviation triangle_grid_deviation_serial(int grid) {
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 points per side");
  const int steps = grid - 1;
  GridDeviation out{0.0, 0};
  for (int i = 0; i < grid; ++i)
    for (int j = 0; i + j < grid; ++j) {
      out.max_deviation = std::max(out.max_deviation, point_deviation(i, j, steps));
      ++out.points;
    }
  return out;
}

GridDeviation triangle_grid_deviation(int grid) {
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 points per side");
  const int steps = grid - 1;
  double max_dev = 0.0;
  long points = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(max : max_dev) reduction(+ : points)
  for (int i = 0; i < grid; ++i)
    for (int j = 0; i + j < grid; ++j) {
      max_dev = std::max(max_dev, point_deviation(i, j, steps));
      ++points;
    }
  return {max_dev, points};
}

FRange f_grid_range_serial(int grid) {
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 points per side");
  const int steps = grid - 1;
  FRange out{Rational(2), Rational(-1)};
  for (int i = 0; i < grid; ++i)
    for (int j = 0; i + j < grid; ++j) {
      const Rational v = tri_f({Rational(i, steps), Rational(j, steps)});
      if (v < out.min) out.min = v;
      if (v > out.max) out.max = v;
    }
  return out;
}

FRange f_grid_range(int grid) {
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 points per side");
  const int steps = grid - 1;
  FRange out{Rational(2), Rational(-1)};
#pragma omp parallel
  {
    FRange local{Rational(2), Rational(-1)};
#pragma omp for schedule(dynamic, 4) nowait
    for (int i = 0; i < grid; ++i)
      for (int j = 0; i + j < grid; ++j) {
        const Rational v = tri_f({Rational(i, steps), Rational(j, steps)});
        if (v < local.min) local.min = v;
        if (v > local.max) local.max = v;
      }
#pragma omp critical
    {
      if (local.min < out.min) out.min = local.min;
      if (local.max > out.max) out.max = local.max;
    }
  }
  return out;
}

namespace {
SliceLift lift_for_trace(const Rational& a) {
  if (a <= 0 || a >= 3)
    throw std::invalid_argument("slice scan requires a trace strictly between 0 and 3");
  SliceLift lift;
  lift.identity_input = false;
  if (a >= 1) {
    lift.center = SliceCenter::Identity;
    lift.t = Rational(2) / (3 - a);
  } else {
    lift.center = SliceCenter::C;
    lift.t = Rational(1) / a;
  }
  return lift;
}

struct ScanContext {
  SliceLift lift;
  CharPoly target_poly;
  const ExactMatrix* target;
  int steps;
};

std::optional<SliceScanHit> scan_point(const ScanContext& ctx, int i, int j) {
  const TriPoint p{Rational(i, ctx.steps), Rational(j, ctx.steps)};
  const ExactMatrix candidate = unlift(tri_to_matrix(p), ctx.lift);
  if (!(char_poly(candidate) == ctx.target_poly)) return std::nullopt;
  return SliceScanHit{p, are_perm_similar(candidate, *ctx.target).perm.has_value()};
}
}  // namespace

std::vector<SliceScanHit> slice_cospectral_scan_serial(const ExactMatrix& target, int grid) {
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 points per side");
  if (target.dim() != 3 || !is_symmetric(target) || !is_doubly_stochastic(target))
    throw std::invalid_argument("slice scan target must be symmetric doubly stochastic 3x3");
  ScanContext ctx{lift_for_trace(target.trace().as_rational()), char_poly(target), &target,
                  grid - 1};
  std::vector<SliceScanHit> hits;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; i + j < grid; ++j)
      if (auto hit = scan_point(ctx, i, j)) hits.push_back(*hit);
  return hits;
}

std::vector<SliceScanHit> slice_cospectral_scan(const ExactMatrix& target, int grid) {
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 points per side");
  if (target.dim() != 3 || !is_symmetric(target) || !is_doubly_stochastic(target))
    throw std::invalid_argument("slice scan target must be symmetric doubly stochastic 3x3");
  ScanContext ctx{lift_for_trace(target.trace().as_rational()), char_poly(target), &target,
                  grid - 1};
  std::vector<std::pair<long, SliceScanHit>> indexed;
#pragma omp parallel
  {
    std::vector<std::pair<long, SliceScanHit>> local;
#pragma omp for schedule(dynamic, 4) nowait
    for (int i = 0; i < grid; ++i)
      for (int j = 0; i + j < grid; ++j)
        if (auto hit = scan_point(ctx, i, j))
          local.emplace_back(static_cast<long>(i) * grid + j, *hit);
#pragma omp critical
    indexed.insert(indexed.end(), local.begin(), local.end());
  }
  std::sort(indexed.begin(), indexed.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<SliceScanHit> hits;
  hits.reserve(indexed.size());
  for (auto& [idx, hit] : indexed) hits.push_back(std::move(hit));
  return hits;
}

}  // namespace dsm
