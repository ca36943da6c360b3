#include "dsm/certify.hpp"
#include "dsm/charpoly.hpp"
#include "dsm/families.hpp"
#include "dsm/graph.hpp"
#include "dsm/permsim.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace dsm;

namespace {
// brute-force oracle: every edge subset, filter k-regular, dedup by
// all n! relabelings (n <= 6)
std::vector<Graph> enumerate_regular_brute(int n, int k) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> reps;
  for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t t = 0; t < slots.size(); ++t)
      if ((mask >> t) & 1) g.add_edge(slots[t].first, slots[t].second);
    if (regular_degree(g) != k) continue;
    bool fresh = true;
    for (const Graph& r : reps)
      if (isomorphic(g, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(g);
  }
  return reps;
}
}  // namespace

TEST_CASE("graph basics and scaling") {
  CHECK(regular_degree(complete_graph(5)) == 4);
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_FALSE(regular_degree(path).has_value());
  // a perfect matching on 6 vertices is 1-regular
  Graph matching(6);
  matching.add_edge(0, 1);
  matching.add_edge(2, 3);
  matching.add_edge(4, 5);
  CHECK(regular_degree(matching) == 1);
  CHECK(scale_to_ds(complete_graph(4)) == mat_C(4));
  CHECK(scale_to_ds(complete_bipartite(2, 2)) == block_J(2));
  CHECK(scale_to_ds(disjoint_union(complete_graph(3), complete_graph(3))) ==
        direct_sum(mat_C(3), mat_C(3)));
  CHECK_THROWS_AS(scale_to_ds(path), std::invalid_argument);
  // scaled regular graphs are doubly stochastic with zero trace
  for (const Graph& g : {complete_graph(5), cycle_graph(6), complete_bipartite(3, 3)}) {
    const ExactMatrix m = scale_to_ds(g);
    CHECK(is_doubly_stochastic(m));
    CHECK(m.trace().is_zero());
  }
}

TEST_CASE("graph6 round trip") {
  for (const Graph& g : {complete_graph(5), cycle_graph(7), complete_bipartite(3, 4),
                         disjoint_union(complete_graph(3), cycle_graph(4))}) {
    const Graph back = from_graph6(to_graph6(g));
    CHECK(back == g);
  }
  // the 5-cycle in the standard layout (bits x(0,1),x(0,2),x(1,2),...
  // packed 6 per character with offset 63: 101001|100100 -> "hc")
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
}

TEST_CASE("regular enumeration matches the brute-force oracle") {
  const std::vector<std::tuple<int, int, std::size_t>> cases = {
      {4, 2, 1},  // the 4-cycle
      {4, 3, 1},  // K_4
      {5, 2, 1},  // the 5-cycle
      {6, 2, 2},  // 6-cycle, two triangles
      {6, 3, 2},  // K_{3,3} and the prism
  };
  for (const auto& [n, k, expect] : cases) {
    const auto fast = enumerate_regular(n, k);
    const auto brute = enumerate_regular_brute(n, k);
    CHECK(fast.size() == expect);
    CHECK(brute.size() == expect);
    // same classes: every brute representative appears in fast
    for (const Graph& b : brute) {
      bool found = false;
      for (const Graph& f : fast) found = found || isomorphic(b, f);
      CHECK(found);
    }
  }
  // serial reference agrees with the parallel kernel exactly
  for (int k = 0; k <= 5; ++k) {
    const auto par = enumerate_regular(6, k);
    const auto ser = enumerate_regular_serial(6, k);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
  }
  CHECK_THROWS_AS(enumerate_regular(5, 3), std::invalid_argument);   // nk odd
  CHECK_THROWS_AS(enumerate_regular(11, 2), std::invalid_argument);  // over budget
}

TEST_CASE("enumeration output is canonical and k-regular") {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {6, 3}, {7, 4}, {8, 3}}) {
    const auto graphs = enumerate_regular(n, k);
    std::set<std::string> seen;
    for (const Graph& g : graphs) {
      CHECK(regular_degree(g) == k);
      CHECK(seen.insert(to_graph6(g)).second);  // distinct canonical forms
    }
    // pairwise non-isomorphic
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i + 1; j < graphs.size(); ++j)
        CHECK_FALSE(isomorphic(graphs[i], graphs[j]));
  }
  // counts for 8 vertices: cubic graphs
  CHECK(enumerate_regular(8, 3).size() == 6);
  CHECK(enumerate_regular(8, 5).size() == 3);  // complements of the 2-regular ones
  CHECK(enumerate_regular(8, 2).size() == 3);  // 8-cycle, 3+5, 4+4
}

TEST_CASE("cospectral mates") {
  // the 6-cycle vs two triangles: spectra differ in the multiplicity
  // of eigenvalue 2 (exact characteristic polynomials)
  const CharPoly hexagon = char_poly(adjacency_matrix(cycle_graph(6)));
  const CharPoly triangles =
      char_poly(adjacency_matrix(disjoint_union(complete_graph(3), complete_graph(3))));
  CHECK(hexagon != triangles);
  CHECK(cospectral_mates(6, 2).empty());
  CHECK(cospectral_mates(4, 2).empty());
  CHECK(cospectral_mates(4, 3).empty());
}

TEST_CASE("strongly regular parameters") {
  const auto c5 = srg_params(cycle_graph(5));
  REQUIRE(c5.has_value());
  CHECK(c5->v == 5);
  CHECK(c5->k == 2);
  CHECK(c5->lambda == 0);
  CHECK(c5->mu == 1);
  CHECK_FALSE(srg_params(complete_graph(4)).has_value());  // complete excluded
  const auto k33 = srg_params(complete_bipartite(3, 3));
  REQUIRE(k33.has_value());
  CHECK(k33->v == 6);
  CHECK(k33->k == 3);
  CHECK(k33->lambda == 0);
  CHECK(k33->mu == 3);
  // consistency identity k(k - lambda - 1) = (v - k - 1) mu
  for (const auto& p : {*c5, *k33})
    CHECK(p.k * (p.k - p.lambda - 1) == (p.v - p.k - 1) * p.mu);
  CHECK_FALSE(srg_params(cycle_graph(6)).has_value());  // common counts not constant
}

TEST_CASE("graph reports juxtapose both facts") {
  const GraphDsReport k4 = graph_ds_report(complete_graph(4));
  CHECK(k4.ds_among_regular);
  CHECK(k4.verdict_status == "CertifiedDS");
  CHECK(k4.verdict_certificate.find("Cor 2.6/2.9") != std::string::npos);

  const GraphDsReport k33 = graph_ds_report(complete_bipartite(3, 3));
  CHECK(k33.ds_among_regular);
  CHECK(k33.verdict_status == "CertifiedDS");
  CHECK(k33.verdict_certificate.find("Thm 2.14") != std::string::npos);

  // a perfect matching scales to a permutation matrix
  Graph matching(6);
  matching.add_edge(0, 1);
  matching.add_edge(2, 3);
  matching.add_edge(4, 5);
  const GraphDsReport m = graph_ds_report(matching);
  CHECK(m.ds_among_regular);
  CHECK(m.verdict_status == "CertifiedDS");
  CHECK(m.verdict_certificate.find("Thm 2.3") != std::string::npos);

  // disjoint complete graphs land on the C-blocks matcher
  const GraphDsReport cc = graph_ds_report(disjoint_union(complete_graph(4), complete_graph(4)));
  CHECK(cc.verdict_status == "CertifiedDS");
  CHECK(cc.verdict_certificate.find("Cor 2.13") != std::string::npos);

  // a generic cubic graph on 8 vertices: honest Unknown is permitted
  const auto cubics = enumerate_regular(8, 3);
  bool saw_unknown = false;
  for (const Graph& g : cubics) {
    const GraphDsReport rep = graph_ds_report(g, 50, 5);
    saw_unknown = saw_unknown || rep.verdict_status == "Unknown";
  }
  CHECK(saw_unknown);
}
