#include "dsm/graph.hpp"

#include "dsm/certify.hpp"
#include "dsm/charpoly.hpp"
#include "dsm/permsim.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dsm {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 1 || n > 32) throw std::invalid_argument("graph order must be in [1, 32]");
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("invalid edge endpoints");
  adj_[u] |= 1u << v;
  adj_[v] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~(1u << v);
  adj_[v] &= ~(1u << u);
}

int Graph::degree(int v) const { return __builtin_popcount(adj_[v]); }

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<bool> Graph::triangle_bits() const {
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) bits.push_back(has_edge(i, j));
  return bits;
}

ExactMatrix adjacency_matrix(const Graph& g) {
  ExactMatrix m(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      if (g.has_edge(i, j)) m.at(i, j) = QuadScalar(1);
  return m;
}

std::optional<int> regular_degree(const Graph& g) {
  const int k = g.degree(0);
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

ExactMatrix scale_to_ds(const Graph& g) {
  const auto k = regular_degree(g);
  if (!k || *k < 1) throw std::invalid_argument("scale_to_ds requires a k-regular graph, k >= 1");
  return QuadScalar(Rational(1, *k)) * adjacency_matrix(g);
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int n1, int n2) {
  Graph g(n1 + n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) g.add_edge(i, n1 + j);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      if (a.has_edge(i, j)) g.add_edge(i, j);
  for (int i = 0; i < b.order(); ++i)
    for (int j = i + 1; j < b.order(); ++j)
      if (b.has_edge(i, j)) g.add_edge(a.order() + i, a.order() + j);
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  const int n = s[0] - 63;
  if (n < 1 || n > 32) throw std::invalid_argument("graph6 order out of the supported [1, 32]");
  Graph g(n);
  std::size_t pos = 1;
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
        acc = s[pos++] - 63;
        if (acc < 0 || acc > 63) throw std::invalid_argument("bad graph6 character");
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
      --nbits;
    }
  return g;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  return are_perm_similar(adjacency_matrix(a), adjacency_matrix(b)).perm.has_value();
}

namespace {
// True when no relabeling of g yields a strictly smaller adjacency bit
// string in column-major upper-triangle order (the graph6 bit order;
// its prefixes are induced subgraphs on initial segments, which is
// what makes prefix pruning during generation sound).
bool col_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> tau(n, -1);
  std::vector<bool> used(n, false);
  // returns true if a strictly smaller relabeling exists in this branch
  auto dfs = [&](auto&& self, int p) -> bool {
    if (p == n) return false;  // complete relabeling equal: an automorphism
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      int cmp = 0;  // candidate column vs g's column at position p
      for (int i = 0; i < p; ++i) {
        const int cand = g.has_edge(tau[i], w) ? 1 : 0;
        const int have = g.has_edge(i, p) ? 1 : 0;
        if (cand != have) {
          cmp = cand - have;
          break;
        }
      }
      if (cmp > 0) continue;
      if (cmp < 0) return true;
      tau[p] = w;
      used[w] = true;
      if (self(self, p + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return !dfs(dfs, 0);
}

struct EnumState {
  int n, k;
  Graph g;
  std::vector<int> deg;
};

// Walks the vertex-extension tree from vertex v: tries every
// back-neighbor set for v that keeps the degree bounds satisfiable,
// prunes non-canonical prefixes, and hands states at depth `stop` to
// the sink. With stop == n the sinked graphs are exactly the canonical
// k-regular graphs.
template <typename Sink>
void walk(EnumState& st, int v, int stop, Sink&& sink) {
  const int n = st.n, k = st.k;
  if (v == stop) {
    sink(st);
    return;
  }
  const int remaining_after = n - 1 - v;  // vertices still to come after v
  for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
    const int back = __builtin_popcount(mask);
    if (back > k || k - back > remaining_after) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if ((mask >> u) & 1) ok = st.deg[u] + 1 <= k;
    if (!ok) continue;
    for (int u = 0; u < v; ++u)
      if ((mask >> u) & 1) {
        st.g.add_edge(u, v);
        ++st.deg[u];
      }
    st.deg[v] = back;
    bool feasible = true;
    for (int u = 0; u <= v && feasible; ++u)
      feasible = st.deg[u] + remaining_after >= k && st.deg[u] <= k;
    if (feasible && v == n - 1)
      for (int u = 0; u < n && feasible; ++u) feasible = st.deg[u] == k;
    if (feasible) {
      // prefix = induced subgraph on 0..v; a canonical graph has
      // canonical initial segments in column-major bit order
      Graph prefix(v + 1);
      for (int i = 0; i <= v; ++i)
        for (int j = i + 1; j <= v; ++j)
          if (st.g.has_edge(i, j)) prefix.add_edge(i, j);
      if (col_canonical(prefix)) walk(st, v + 1, stop, sink);
    }
    for (int u = 0; u < v; ++u)
      if ((mask >> u) & 1) {
        st.g.remove_edge(u, v);
        --st.deg[u];
      }
    st.deg[v] = 0;
  }
}

void check_enum_args(int n, int k) {
  if (n < 1 || n > 10) throw std::invalid_argument("regular-graph enumeration budget is n <= 10");
  if (k < 0 || k >= n) throw std::invalid_argument("degree must satisfy 0 <= k < n");
  if ((n * k) % 2 != 0) throw std::invalid_argument("infeasible: nk is odd");
}

void sort_by_bits(std::vector<Graph>& graphs) {
  std::sort(graphs.begin(), graphs.end(),
            [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
}
}  // namespace

std::vector<Graph> enumerate_regular_serial(int n, int k) {
  check_enum_args(n, k);
  EnumState st{n, k, Graph(n), std::vector<int>(n, 0)};
  std::vector<Graph> out;
  walk(st, 1, n, [&out](const EnumState& s) { out.push_back(s.g); });
  sort_by_bits(out);
  return out;
}

std::vector<Graph> enumerate_regular(int n, int k) {
  check_enum_args(n, k);
  // split the search at a shallow depth; subtrees are independent
  const int split_depth = std::min(n, 5);
  std::vector<EnumState> seeds;
  {
    EnumState st{n, k, Graph(n), std::vector<int>(n, 0)};
    walk(st, 1, split_depth, [&seeds](const EnumState& s) { seeds.push_back(s); });
  }
  std::vector<Graph> out;
#pragma omp parallel
  {
    std::vector<Graph> local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      EnumState st = seeds[i];
      walk(st, split_depth, n, [&local](const EnumState& s) { local.push_back(s.g); });
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  sort_by_bits(out);
  return out;
}

std::vector<MatePair> cospectral_mates(int n, int k) {
  const std::vector<Graph> graphs = enumerate_regular(n, k);
  std::map<std::string, std::vector<std::size_t>> by_poly;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const CharPoly p = char_poly(adjacency_matrix(graphs[i]));
    std::string key;
    for (const auto& c : p.coeffs) key += c.to_string() + ";";
    by_poly[key].push_back(i);
  }
  std::vector<MatePair> out;
  for (const auto& [key, idxs] : by_poly)
    for (std::size_t a = 0; a < idxs.size(); ++a)
      for (std::size_t b = a + 1; b < idxs.size(); ++b)
        out.push_back({graphs[idxs[a]], graphs[idxs[b]]});
  return out;
}

std::optional<SrgParams> srg_params(const Graph& g) {
  const int n = g.order();
  const auto k = regular_degree(g);
  if (!k) return std::nullopt;
  const int edges = g.edge_count();
  if (edges == 0 || edges == n * (n - 1) / 2) return std::nullopt;  // edgeless or complete
  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int common = 0;
      for (int w = 0; w < n; ++w)
        if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) ++common;
      int& slot = g.has_edge(u, v) ? lambda : mu;
      if (slot < 0)
        slot = common;
      else if (slot != common)
        return std::nullopt;
    }
  if (lambda < 0) lambda = 0;  // no adjacent pairs cannot happen here (edges > 0)
  if (mu < 0) mu = 0;
  return SrgParams{n, *k, lambda, mu};
}

GraphDsReport graph_ds_report(const Graph& g, long budget, std::uint64_t seed) {
  const auto k = regular_degree(g);
  if (!k || *k < 1) throw std::invalid_argument("report requires a k-regular graph, k >= 1");
  GraphDsReport rep;
  rep.n = g.order();
  rep.k = *k;
  const CharPoly mine = char_poly(adjacency_matrix(g));
  rep.ds_among_regular = true;
  for (const Graph& h : enumerate_regular(g.order(), *k)) {
    if (isomorphic(g, h)) continue;
    if (char_poly(adjacency_matrix(h)) == mine) {
      rep.ds_among_regular = false;
      rep.mates.push_back(to_graph6(h));
    }
  }
  const Verdict v = certify(scale_to_ds(g), Scope::Symmetric, budget, seed);
  rep.verdict_status = status_name(v.status);
  rep.verdict_certificate = v.certificate;
  return rep;
}

}  // namespace dsm
