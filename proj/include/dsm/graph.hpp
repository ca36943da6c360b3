#ifndef DSM_GRAPH_HPP_
#define DSM_GRAPH_HPP_

#include "dsm/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dsm {

/// Simple undirected graph on up to 32 vertices, adjacency bitsets.
class Graph {
 public:
  explicit Graph(int n);

  int order() const { return n_; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const;
  int edge_count() const;

  /// Upper-triangle bits in row-major order, the enumeration key.
  std::vector<bool> triangle_bits() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_;
  std::vector<std::uint32_t> adj_;
};

/// 0/1 adjacency matrix over exact rationals.
ExactMatrix adjacency_matrix(const Graph& g);

/// k when all degrees equal k, otherwise nothing.
std::optional<int> regular_degree(const Graph& g);

/// (1/k) * A(G) for a k-regular graph with k >= 1: a zero-trace
/// element of the symmetric doubly stochastic polytope.
ExactMatrix scale_to_ds(const Graph& g);

Graph complete_graph(int n);
Graph complete_bipartite(int n1, int n2);
Graph cycle_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Standard graph6 encoding (n <= 62 here), upper triangle column-major.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

/// Adjacency-matrix permutation similarity (shares the matrix code path).
bool isomorphic(const Graph& a, const Graph& b);

/// All pairwise non-isomorphic k-regular graphs on n <= 10 vertices by
/// orderly row-by-row generation; each survivor is the
/// lexicographically minimal relabeling of its class. Deterministic
/// ascending output order. Throws for nk odd or out-of-budget n.
std::vector<Graph> enumerate_regular(int n, int k);
std::vector<Graph> enumerate_regular_serial(int n, int k);

struct MatePair {
  Graph g, h;
};

/// Unordered pairs of enumerate_regular(n, k) with exactly equal
/// adjacency characteristic polynomials (cospectral non-isomorphic).
std::vector<MatePair> cospectral_mates(int n, int k);

struct SrgParams {
  int v, k, lambda, mu;
};

/// Strongly-regular parameters when G is regular, neither complete nor
/// edgeless, and the common-neighbor counts are constant.
std::optional<SrgParams> srg_params(const Graph& g);

struct GraphDsReport {
  int n, k;
  bool ds_among_regular;          // no cospectral non-isomorphic regular mate
  std::vector<std::string> mates; // graph6 of cospectral mates, if any
  std::string verdict_status;     // certify(scale_to_ds(G)) outcome
  std::string verdict_certificate;
};

/// Evidence juxtaposition for the graph-to-polytope question: (i) is G
/// determined by its spectrum among k-regular graphs of its order,
/// (ii) what does the matrix certifier say about (1/k)A(G). No
/// implication between the two is drawn.
GraphDsReport graph_ds_report(const Graph& g, long budget = 2000, std::uint64_t seed = 1);

}  // namespace dsm

#endif  // DSM_GRAPH_HPP_
