#include "dsm/families.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace dsm {

ExactMatrix mat_identity(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = QuadScalar(1);
  return m;
}

ExactMatrix mat_J(int n) {
  ExactMatrix m(n);
  const QuadScalar v{Rational(1, n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v;
  return m;
}

ExactMatrix mat_C(int n) {
  if (n < 2) throw std::invalid_argument("C_n requires n >= 2");
  ExactMatrix m(n);
  const QuadScalar v{Rational(1, n - 1)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m.at(i, j) = v;
  return m;
}

ExactMatrix vertex_X() { return permutation_matrix({1, 3, 2}); }
ExactMatrix vertex_Y() { return permutation_matrix({3, 2, 1}); }
ExactMatrix vertex_Z() { return permutation_matrix({2, 1, 3}); }

ExactMatrix permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const int img = perm[i];
    if (img < 1 || img > n || seen[img - 1])
      throw std::invalid_argument("not a permutation in one-based image notation");
    seen[img - 1] = true;
    m.at(i, img - 1) = QuadScalar(1);
  }
  return m;
}

ExactMatrix trace_point(int n, const Rational& a) {
  if (n < 2) throw std::invalid_argument("trace_point requires n >= 2");
  if (a < 0 || a > n) throw std::invalid_argument("trace parameter out of [0, n]");
  if (a <= 1) {
    // a*J_n + (1-a)*C_n
    return segment_point(mat_C(n), mat_J(n), a);
  }
  const Rational s = (a - 1) / Rational(n - 1);
  return segment_point(mat_J(n), mat_identity(n), s);
}

namespace {
ExactMatrix zero_block_form(const ExactMatrix& k) {
  const int m = k.dim();
  ExactMatrix r(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      r.at(i, m + j) = k.at(i, j);
      r.at(m + i, j) = k.at(i, j);
    }
  return r;
}
}  // namespace

ExactMatrix block_identity(int m) { return zero_block_form(mat_identity(m)); }
ExactMatrix block_J(int m) { return zero_block_form(mat_J(m)); }
ExactMatrix block_C(int m) { return zero_block_form(mat_C(m)); }

ExactMatrix segment_point(const ExactMatrix& a, const ExactMatrix& b, const Rational& t) {
  if (a.dim() != b.dim()) throw std::invalid_argument("segment endpoints differ in dimension");
  if (t < 0 || t > 1) throw std::invalid_argument("segment parameter out of [0,1]");
  const QuadScalar w1{Rational(1) - t}, w2{t};
  ExactMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = w1 * a.at(i, j) + w2 * b.at(i, j);
  return r;
}

ExactMatrix direct_sum(std::span<const ExactMatrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("direct_sum of no blocks");
  int n = 0;
  for (const auto& b : blocks) n += b.dim();
  ExactMatrix r(n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j) r.at(off + i, off + j) = b.at(i, j);
    off += b.dim();
  }
  return r;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  const ExactMatrix blocks[] = {a, b};
  return direct_sum(std::span<const ExactMatrix>(blocks));
}

ExactMatrix block_bipartite(const ExactMatrix& a) {
  if (!is_doubly_stochastic(a)) throw std::invalid_argument("block_bipartite requires a doubly stochastic block");
  const int n = a.dim();
  const ExactMatrix j = mat_J(n);
  ExactMatrix r(2 * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      r.at(i, n + k) = j.at(i, k);
      r.at(n + i, k) = a.at(i, k);
    }
  return r;
}

std::vector<Component> irreducible_components(const ExactMatrix& m) {
  const int n = m.dim();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        if (!m.at(u, v).is_zero() || !m.at(v, u).is_zero()) {
          comp[v] = ncomp;
          q.push(v);
        }
      }
    }
    ++ncomp;
  }
  std::vector<Component> out;
  out.reserve(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) idx.push_back(i);
    ExactMatrix block(static_cast<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) block.at(static_cast<int>(i), static_cast<int>(j)) = m.at(idx[i], idx[j]);
    out.push_back({std::move(idx), std::move(block)});
  }
  return out;
}

Imprimitivity imprimitivity_index(const ExactMatrix& m) {
  const int n = m.dim();
  if (irreducible_components(m).size() != 1)
    throw std::invalid_argument("imprimitivity index requires an irreducible matrix");
  // BFS levels from vertex 0; the period is the gcd of
  // level(u) + 1 - level(v) over all support edges u -> v.
  std::vector<int> level(n, -1);
  level[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < n; ++v)
      if (!m.at(u, v).is_zero() && level[v] < 0) {
        level[v] = level[u] + 1;
        q.push(v);
      }
  }
  int g = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (!m.at(u, v).is_zero()) g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
  if (g == 0) g = 1;
  Imprimitivity out;
  out.k = g;
  if (g > 1) {
    out.classes.resize(g);
    for (int v = 0; v < n; ++v) out.classes[((level[v] % g) + g) % g].push_back(v);
  }
  return out;
}

namespace {
// Gauss-Jordan over the entry field; returns false when singular.
bool invert_in_place(std::vector<std::vector<QuadScalar>>& a, std::vector<std::vector<QuadScalar>>& inv) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const QuadScalar p = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const QuadScalar f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return true;
}
}  // namespace

ExactMatrix inverse(const ExactMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<QuadScalar>> a(n, std::vector<QuadScalar>(n)), inv(n, std::vector<QuadScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  for (int i = 0; i < n; ++i) inv[i][i] = QuadScalar(1);
  if (!invert_in_place(a, inv)) throw std::domain_error("matrix is singular");
  ExactMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = inv[i][j];
  return r;
}

QuadScalar determinant(const ExactMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<QuadScalar>> a(n, std::vector<QuadScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  QuadScalar det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return QuadScalar(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const QuadScalar p = a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const QuadScalar f = a[r][col] / p;
      for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

int rank(const ExactMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<QuadScalar>> a(n, std::vector<QuadScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  int rk = 0;
  for (int col = 0; col < n && rk < n; ++col) {
    int pivot = -1;
    for (int r = rk; r < n; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rk]);
    const QuadScalar p = a[rk][col];
    for (int r = rk + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const QuadScalar f = a[r][col] / p;
      for (int j = col; j < n; ++j) a[r][j] -= f * a[rk][j];
    }
    ++rk;
  }
  return rk;
}

}  // namespace dsm
