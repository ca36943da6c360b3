#include "dsm/families.hpp"
#include "dsm/permsim.hpp"
#include "dsm/scan.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace dsm;

TEST_CASE("parallel grid kernels match the serial reference") {
  const GridDeviation par = triangle_grid_deviation(41);
  const GridDeviation ser = triangle_grid_deviation_serial(41);
  CHECK(par.points == ser.points);
  CHECK(par.max_deviation == ser.max_deviation);  // bitwise: max of the same set
  CHECK(par.max_deviation <= 1e-10);

  const FRange fr = f_grid_range(41);
  const FRange fs = f_grid_range_serial(41);
  CHECK(fr.min == fs.min);
  CHECK(fr.max == fs.max);
  CHECK(fr.min >= 0);
  CHECK(fr.max <= 1);
}

TEST_CASE("slice scan finds exactly the permutation images") {
  // scan the trace-1/3 slice for matrices cospectral with the
  // counterexample: only its permutation images (the three slice
  // corners) qualify
  const ExactMatrix a = dsm::test::counterexample3();
  const auto hits = slice_cospectral_scan(a, 41);
  REQUIRE(hits.size() == 3);
  for (const auto& h : hits) CHECK(h.perm_similar);
  CHECK(hits[0].point == TriPoint{Rational(0), Rational(0)});
  CHECK(hits[1].point == TriPoint{Rational(0), Rational(1)});
  CHECK(hits[2].point == TriPoint{Rational(1), Rational(0)});
  const auto serial = slice_cospectral_scan_serial(a, 41);
  REQUIRE(serial.size() == hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i) {
    CHECK(serial[i].point == hits[i].point);
    CHECK(serial[i].perm_similar == hits[i].perm_similar);
  }
}

TEST_CASE("slice scan sees the mate of an off-segment point") {
  // the trace-1 point (1/2, 1/2) has cospectral grid mates that are
  // not permutation images (it is not determined by its spectrum);
  // the 49-grid carries the sixth-denominator ray points
  const ExactMatrix m = tri_to_matrix({Rational(1, 2), Rational(1, 2)});
  const auto hits = slice_cospectral_scan(m, 49);
  int foreign = 0, images = 0;
  for (const auto& h : hits) (h.perm_similar ? images : foreign)++;
  CHECK(images == 3);   // coordinate permutations of (1/2, 1/2, 0)
  CHECK(foreign >= 3);  // the (1/6, 1/6, 2/3) orbit at the same level
}
