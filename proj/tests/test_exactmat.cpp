#include "dsm/families.hpp"
#include "dsm/matrix.hpp"
#include "dsm/permsim.hpp"
#include "dsm/quad.hpp"
#include "dsm/random.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace dsm;
using dsm::test::from_rows;
using dsm::test::rat;

TEST_CASE("rational parse/format round trip") {
  CHECK(to_string(rat("-2/3")) == "-2/3");
  CHECK(rat("6/4") == Rational(3, 2));
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(to_decimal(Rational(1, 3), 6) == "0.333333");
  CHECK(to_decimal(Rational(-1, 2), 3) == "-0.500");
}

TEST_CASE("quadratic scalar arithmetic and normalization") {
  const QuadScalar a(Rational(1, 2), Rational(1, 3), 7);
  const QuadScalar b(Rational(1, 4), Rational(-1, 3), 7);
  CHECK((a + b) == QuadScalar(Rational(3, 4)));
  CHECK((a + b).radicand() == 1);  // radical part cancelled
  CHECK((a * b).radicand() == 7);
  // sqrt(7/100) = (1/10) sqrt(7)
  const QuadScalar s = QuadScalar::sqrt_of(Rational(7, 100));
  CHECK(s.radical_coeff() == Rational(1, 10));
  CHECK(s.radicand() == 7);
  // sqrt(1/4) collapses to a rational
  CHECK(QuadScalar::sqrt_of(Rational(1, 4)) == QuadScalar(Rational(1, 2)));
  // d normalizes to its square-free core: sqrt(12) = 2 sqrt(3)
  const QuadScalar t(Rational(0), Rational(1), 12);
  CHECK(t.radicand() == 3);
  CHECK(t.radical_coeff() == Rational(2));
  // mixing distinct radicands is an error
  const QuadScalar u(Rational(0), Rational(1), 5);
  CHECK_THROWS_AS(a + u, std::domain_error);
  // exact ordering via sign computation: 1 + sqrt(2) > 2 and
  // 3 - 2 sqrt(2) is positive while 1 - sqrt(2) is negative
  CHECK(QuadScalar(Rational(1), Rational(1), 2) > QuadScalar(2));
  CHECK(QuadScalar(Rational(3), Rational(-2), 2).sign() == 1);
  CHECK(QuadScalar(Rational(1), Rational(-1), 2).sign() == -1);
  // division inverts exactly
  const QuadScalar inv = QuadScalar(1) / a;
  CHECK(inv * a == QuadScalar(1));
}

TEST_CASE("scalar string round trip") {
  for (const std::string s : {"1/2", "-2/3", "0/1", "1/3+2/5*sqrt(7)", "-1/3-2/5*sqrt(7)",
                              "0/1+1/10*sqrt(7)"}) {
    CHECK(parse_scalar(s).to_string() == s);
  }
  CHECK(parse_scalar("5") == QuadScalar(5));
}

TEST_CASE("doubly stochastic predicate") {
  CHECK(is_doubly_stochastic(mat_J(3)));
  CHECK(is_doubly_stochastic(dsm::test::counterexample3()));
  CHECK_FALSE(is_doubly_stochastic(from_rows({{"3/2", "-1/2"}, {"-1/2", "3/2"}})));
}

TEST_CASE("doubly quasi-stochastic predicate") {
  CHECK(is_doubly_quasi_stochastic(from_rows({{"3/2", "-1/2"}, {"-1/2", "3/2"}})));
  CHECK(is_doubly_quasi_stochastic(mat_J(4)));
  CHECK_FALSE(is_doubly_quasi_stochastic(from_rows({{"1", "1"}, {"0", "0"}})));
}

TEST_CASE("symmetry predicate") {
  CHECK(is_symmetric(mat_C(5)));
  CHECK_FALSE(is_symmetric(permutation_matrix({2, 3, 1})));
  CHECK(is_symmetric(vertex_X()));
}

TEST_CASE("family constructors") {
  CHECK(mat_C(3) == from_rows({{"0", "1/2", "1/2"}, {"1/2", "0", "1/2"}, {"1/2", "1/2", "0"}}));
  // oracle: direct arithmetic for the trace-2 point at n = 3
  const ExactMatrix half_i_half_j =
      segment_point(mat_identity(3), mat_J(3), Rational(1, 2));
  CHECK(trace_point(3, Rational(2)) == half_i_half_j);
  CHECK(trace_point(3, Rational(2)) ==
        from_rows({{"2/3", "1/6", "1/6"}, {"1/6", "2/3", "1/6"}, {"1/6", "1/6", "2/3"}}));
  // both branch formulas agree at a = 1
  for (int n : {2, 3, 5}) {
    CHECK(trace_point(n, Rational(1)) == mat_J(n));
    const Rational a(1);
    const ExactMatrix low = segment_point(mat_C(n), mat_J(n), a);
    CHECK(low == mat_J(n));
  }
  CHECK_THROWS_AS(trace_point(3, Rational(4)), std::invalid_argument);
  CHECK_THROWS_AS(trace_point(3, Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(mat_C(1), std::invalid_argument);
  // every named family member is doubly stochastic and symmetric
  for (const ExactMatrix& m :
       {mat_identity(4), mat_J(4), mat_C(4), vertex_X(), vertex_Y(), vertex_Z(),
        trace_point(4, Rational(1, 2)), block_identity(3), block_J(3), block_C(3)}) {
    CHECK(is_doubly_stochastic(m));
    CHECK(is_symmetric(m));
  }
}

TEST_CASE("segment points") {
  // (2/3) C_3 + (1/3) Z reproduces the spectrum-(1,0,-2/3) matrix
  CHECK(segment_point(mat_C(3), vertex_Z(), Rational(1, 3)) == dsm::test::counterexample3());
  const ExactMatrix a = mat_C(4), b = mat_J(4);
  CHECK(segment_point(a, b, Rational(0)) == a);
  CHECK(segment_point(mat_identity(3), mat_C(3), Rational(2, 3)) == mat_J(3));
  CHECK_THROWS_AS(segment_point(a, mat_J(3), Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(segment_point(a, b, Rational(3, 2)), std::invalid_argument);
  // convexity: random segment points of doubly stochastic pairs stay in the polytope
  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    const ExactMatrix p = random_doubly_stochastic(4, rng);
    const ExactMatrix q = random_doubly_stochastic(4, rng);
    const Rational t(rng.below(11), 10);
    CHECK(is_doubly_stochastic(segment_point(p, q, t)));
  }
}

TEST_CASE("C_n via the J_n identity") {
  for (int n = 2; n <= 8; ++n) {
    const QuadScalar cn{Rational(n, n - 1)};
    const QuadScalar cm{Rational(1, n - 1)};
    CHECK(mat_C(n) == cn * mat_J(n) - cm * mat_identity(n));
  }
}

TEST_CASE("triangle vertex identities") {
  const ExactMatrix x = vertex_X(), y = vertex_Y(), z = vertex_Z();
  CHECK(QuadScalar(Rational(1, 3)) * (x + y + z) == mat_J(3));
  const QuadScalar dxy = (x - y).frobenius_sq();
  CHECK(dxy == (y - z).frobenius_sq());
  CHECK(dxy == (x - z).frobenius_sq());
}

TEST_CASE("direct sums") {
  const ExactMatrix s1 = direct_sum(mat_J(2), mat_J(4));
  const ExactMatrix s2 = direct_sum(mat_J(3), mat_J(3));
  CHECK(s1.dim() == 6);
  CHECK(s2.dim() == 6);
  const ExactMatrix blocks[] = {mat_C(2)};
  CHECK(direct_sum(std::span<const ExactMatrix>(blocks)) == mat_C(2));
  // three disjoint edges: (1/2) of the perfect-matching adjacency
  const ExactMatrix triple[] = {mat_C(2), mat_C(2), mat_C(2)};
  const ExactMatrix m = direct_sum(std::span<const ExactMatrix>(triple));
  for (int i = 0; i < 6; i += 2) {
    CHECK(m.at(i, i + 1) == QuadScalar(1));
    CHECK(m.at(i + 1, i) == QuadScalar(1));
  }
  CHECK(is_doubly_stochastic(m));
}

TEST_CASE("zero-one block assembly") {
  CHECK(block_bipartite(mat_J(2)) == block_J(2));
  CHECK(block_bipartite(mat_identity(2)) ==
        from_rows({{"0", "0", "1/2", "1/2"},
                   {"0", "0", "1/2", "1/2"},
                   {"1", "0", "0", "0"},
                   {"0", "1", "0", "0"}}));
  const ExactMatrix m = block_bipartite(mat_C(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(m.at(i, 3 + j) == mat_J(3).at(i, j));
      CHECK(m.at(3 + i, j) == mat_C(3).at(i, j));
      CHECK(m.at(i, j).is_zero());
      CHECK(m.at(3 + i, 3 + j).is_zero());
    }
  CHECK_THROWS_AS(block_bipartite(from_rows({{"1", "1"}, {"0", "0"}})), std::invalid_argument);
}

TEST_CASE("irreducible components") {
  const auto comps = irreducible_components(direct_sum(mat_J(2), mat_J(3)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].block == mat_J(2));
  CHECK(comps[1].block == mat_J(3));
  CHECK(irreducible_components(mat_J(5)).size() == 1);
  // permutation (1 2)(3 4 5): components {1,2} and {3,4,5}
  const auto pc = irreducible_components(permutation_matrix({2, 1, 4, 5, 3}));
  REQUIRE(pc.size() == 2);
  CHECK(pc[0].indices == std::vector<int>{0, 1});
  CHECK(pc[1].indices == std::vector<int>{2, 3, 4});
}

TEST_CASE("component reassembly reproduces the matrix") {
  Rng rng(11);
  for (int it = 0; it < 10; ++it) {
    const ExactMatrix a = random_doubly_stochastic(2, rng);
    const ExactMatrix b = random_doubly_stochastic(3, rng);
    ExactMatrix m = apply_perm(direct_sum(a, b), rng.permutation(5));
    const auto comps = irreducible_components(m);
    ExactMatrix rebuilt(m.dim());
    for (const auto& comp : comps)
      for (std::size_t i = 0; i < comp.indices.size(); ++i)
        for (std::size_t j = 0; j < comp.indices.size(); ++j)
          rebuilt.at(comp.indices[i], comp.indices[j]) =
              comp.block.at(static_cast<int>(i), static_cast<int>(j));
    CHECK(rebuilt == m);
  }
}

TEST_CASE("imprimitivity index") {
  const auto b = imprimitivity_index(block_J(3));
  CHECK(b.k == 2);
  REQUIRE(b.classes.size() == 2);
  CHECK(b.classes[0] == std::vector<int>{0, 1, 2});
  CHECK(b.classes[1] == std::vector<int>{3, 4, 5});
  CHECK(imprimitivity_index(mat_J(4)).k == 1);
  CHECK(imprimitivity_index(permutation_matrix({2, 3, 4, 5, 1})).k == 5);
  CHECK_THROWS_AS(imprimitivity_index(direct_sum(mat_J(2), mat_J(2))), std::invalid_argument);
}

TEST_CASE("exact inverse") {
  CHECK(inverse(mat_identity(4)) == mat_identity(4));
  const ExactMatrix m = from_rows({{"3/2", "-1/2"}, {"-1/2", "3/2"}});
  // oracle: the 2x2 inverse formula [[d,-b],[-c,a]]/det
  const QuadScalar det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  ExactMatrix expect(2);
  expect.at(0, 0) = m.at(1, 1) / det;
  expect.at(0, 1) = -m.at(0, 1) / det;
  expect.at(1, 0) = -m.at(1, 0) / det;
  expect.at(1, 1) = m.at(0, 0) / det;
  CHECK(inverse(m) == expect);
  CHECK(inverse(m) == from_rows({{"3/4", "1/4"}, {"1/4", "3/4"}}));
  CHECK_THROWS_AS(inverse(mat_J(3)), std::domain_error);
}

TEST_CASE("inverse of quasi-stochastic is quasi-stochastic") {
  Rng rng(23);
  for (int it = 0; it < 50; ++it) {
    const int n = 2 + rng.below(4);
    const ExactMatrix m = random_quasi_stochastic_invertible(n, rng);
    REQUIRE(is_doubly_quasi_stochastic(m));
    const ExactMatrix inv = inverse(m);
    CHECK(is_doubly_quasi_stochastic(inv));
    CHECK(m * inv == mat_identity(n));
  }
}
