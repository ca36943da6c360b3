#include "dsm/charpoly.hpp"
#include "dsm/families.hpp"
#include "dsm/permsim.hpp"
#include "dsm/random.hpp"
#include "dsm/triangle.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dsm;

namespace {
// oracle: exhaustive search over all n! permutations (n <= 6)
bool perm_similar_brute(const ExactMatrix& a, const ExactMatrix& b) {
  const int n = a.dim();
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  do {
    if (apply_perm(a, p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}
}  // namespace

TEST_CASE("entry multisets distinguish the two J splits") {
  const ExactMatrix s33 = direct_sum(mat_J(3), mat_J(3));
  const ExactMatrix s24 = direct_sum(mat_J(2), mat_J(4));
  const auto m33 = entry_multiset(s33), m24 = entry_multiset(s24);
  CHECK(m33 != m24);
  CHECK(std::count(m33.begin(), m33.end(), QuadScalar(Rational(1, 3))) == 18);
  CHECK(std::count(m33.begin(), m33.end(), QuadScalar(0)) == 18);
  CHECK(std::count(m24.begin(), m24.end(), QuadScalar(Rational(1, 2))) == 4);
  CHECK(std::count(m24.begin(), m24.end(), QuadScalar(Rational(1, 4))) == 16);
  Rng rng(13);
  const ExactMatrix m = random_doubly_stochastic(4, rng);
  CHECK(entry_multiset(m) == entry_multiset(apply_perm(m, rng.permutation(4))));
  // the diagonal is permuted by conjugation, a second prefilter
  CHECK(diagonal_multiset(m) == diagonal_multiset(apply_perm(m, rng.permutation(4))));
  CHECK(diagonal_multiset(direct_sum(mat_identity(2), mat_C(2))) ==
        std::vector<QuadScalar>{QuadScalar(0), QuadScalar(0), QuadScalar(1), QuadScalar(1)});
}

TEST_CASE("permutation similarity search") {
  // the two slice transpositions are conjugate
  const PermWitness xy = are_perm_similar(vertex_X(), vertex_Y());
  REQUIRE(xy.perm.has_value());
  CHECK(apply_perm(vertex_X(), *xy.perm) == vertex_Y());
  // the J splits are not, and the entry multiset already says so
  const PermWitness js = are_perm_similar(direct_sum(mat_J(2), mat_J(4)),
                                          direct_sum(mat_J(3), mat_J(3)));
  CHECK_FALSE(js.perm.has_value());
  CHECK(js.invariant_report == "entry multiset");
  // slice point vs its ray mate: multisets {1/2,0} vs {2/3,1/6}
  const ExactMatrix m = tri_to_matrix({Rational(1, 2), Rational(1, 2)});
  const ExactMatrix k =
      segment_point(mat_J(3), vertex_X(), Rational(1, 2));
  const PermWitness w = are_perm_similar(m, k);
  CHECK_FALSE(w.perm.has_value());
  CHECK_FALSE(perm_similar_brute(m, k));
  CHECK_THROWS_AS(are_perm_similar(mat_J(13), mat_J(13)), std::invalid_argument);
}

TEST_CASE("witness reproduces the conjugation exactly") {
  Rng rng(31);
  for (int it = 0; it < 50; ++it) {
    const int n = 2 + rng.below(5);
    const ExactMatrix m = random_doubly_stochastic(n, rng);
    const ExactMatrix c = apply_perm(m, rng.permutation(n));
    const PermWitness w = are_perm_similar(m, c);
    REQUIRE(w.perm.has_value());
    CHECK(apply_perm(m, *w.perm) == c);
  }
}

TEST_CASE("search agrees with the exhaustive oracle") {
  Rng rng(37);
  for (int it = 0; it < 30; ++it) {
    const int n = 2 + rng.below(3);
    const ExactMatrix a = random_doubly_stochastic(n, rng, 2);
    const ExactMatrix b =
        (it % 3 == 0) ? apply_perm(a, rng.permutation(n)) : random_doubly_stochastic(n, rng, 2);
    CHECK(are_perm_similar(a, b).perm.has_value() == perm_similar_brute(a, b));
  }
}

TEST_CASE("prefilter soundness") {
  // whenever the entry or diagonal multiset separates, the exhaustive
  // search must also find nothing
  Rng rng(43);
  for (int it = 0; it < 30; ++it) {
    const int n = 2 + rng.below(3);
    const ExactMatrix a = random_doubly_stochastic(n, rng, 2);
    const ExactMatrix b = random_doubly_stochastic(n, rng, 2);
    if (entry_multiset(a) != entry_multiset(b) || diagonal_multiset(a) != diagonal_multiset(b))
      CHECK_FALSE(perm_similar_brute(a, b));
  }
}

TEST_CASE("equivalence relation spot checks") {
  Rng rng(47);
  for (int it = 0; it < 10; ++it) {
    const int n = 3 + rng.below(2);
    const ExactMatrix a = random_doubly_stochastic(n, rng);
    const ExactMatrix b = apply_perm(a, rng.permutation(n));
    const ExactMatrix c = apply_perm(b, rng.permutation(n));
    CHECK(are_perm_similar(a, a).perm.has_value());           // reflexive
    CHECK(are_perm_similar(b, a).perm.has_value());           // symmetric
    CHECK(are_perm_similar(a, c).perm.has_value());           // transitive
  }
  // similarity preserves the spectrum
  Rng rng2(53);
  for (int it = 0; it < 10; ++it) {
    const ExactMatrix a = random_doubly_stochastic(4, rng2);
    const ExactMatrix b = apply_perm(a, rng2.permutation(4));
    CHECK(cospectral(a, b));
  }
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(vertex_X()) == canonical_form(vertex_Y()));
  CHECK(canonical_form(vertex_Y()) == canonical_form(vertex_Z()));
  CHECK(canonical_form(mat_J(5)) == mat_J(5));
  // oracle: enumerate all 6 conjugates of a 3x3 transposition matrix
  {
    const ExactMatrix x = vertex_X();
    std::vector<int> p{1, 2, 3};
    ExactMatrix best = x;
    bool first = true;
    do {
      const ExactMatrix c = apply_perm(x, p);
      bool smaller = false;
      for (int i = 0; i < 3 && !smaller; ++i)
        for (int j = 0; j < 3; ++j) {
          const int s = (c.at(i, j) - best.at(i, j)).sign();
          if (s != 0) {
            smaller = s < 0;
            i = 3;
            break;
          }
        }
      if (first || smaller) best = c;
      first = false;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(canonical_form(x) == best);
  }
  // invariance under conjugation
  Rng rng(71);
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + rng.below(5);
    const ExactMatrix m = random_doubly_stochastic(n, rng, 2);
    CHECK(canonical_form(apply_perm(m, rng.permutation(n))) == canonical_form(m));
  }
  // canonical forms decide permutation similarity
  Rng rng2(73);
  for (int it = 0; it < 20; ++it) {
    const int n = 2 + rng2.below(3);
    const ExactMatrix a = random_doubly_stochastic(n, rng2, 2);
    const ExactMatrix b = random_doubly_stochastic(n, rng2, 2);
    CHECK((canonical_form(a) == canonical_form(b)) == perm_similar_brute(a, b));
  }
}

TEST_CASE("witness notation") {
  CHECK(perm_to_string({2, 1, 3}) == "[2,1,3]");
  CHECK(perm_from_string("[2,1,3]") == std::vector<int>{2, 1, 3});
  CHECK(perm_from_string("4,3,2,1") == std::vector<int>{4, 3, 2, 1});
}
