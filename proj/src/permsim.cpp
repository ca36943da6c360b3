#include "dsm/permsim.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dsm {

namespace {
constexpr int kPermBudget = 12;

void check_budget(int n) {
  if (n > kPermBudget)
    throw std::invalid_argument("permutation search limited to n <= 12, got n = " + std::to_string(n));
}

// u and v are twins when swapping them is an automorphism of m; twin
// subtrees of the canonical search produce identical conjugates.
std::vector<int> twin_classes(const ExactMatrix& m) {
  const int n = m.dim();
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int u = 0; u < n; ++u) {
    if (cls[u] >= 0) continue;
    cls[u] = next;
    for (int v = u + 1; v < n; ++v) {
      if (cls[v] >= 0) continue;
      if (m.at(u, u) != m.at(v, v) || m.at(u, v) != m.at(v, u)) continue;
      bool twin = true;
      for (int w = 0; w < n && twin; ++w) {
        if (w == u || w == v) continue;
        twin = m.at(u, w) == m.at(v, w) && m.at(w, u) == m.at(w, v);
      }
      if (twin) cls[v] = next;
    }
    ++next;
  }
  return cls;
}
}  // namespace

std::vector<QuadScalar> entry_multiset(const ExactMatrix& m) {
  std::vector<QuadScalar> v;
  v.reserve(static_cast<std::size_t>(m.dim()) * m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) v.push_back(m.at(i, j));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<QuadScalar> diagonal_multiset(const ExactMatrix& m) {
  std::vector<QuadScalar> v;
  v.reserve(m.dim());
  for (int i = 0; i < m.dim(); ++i) v.push_back(m.at(i, i));
  std::sort(v.begin(), v.end());
  return v;
}

ExactMatrix apply_perm(const ExactMatrix& a, const std::vector<int>& perm) {
  const int n = a.dim();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation length mismatch");
  ExactMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(perm[i] - 1, perm[j] - 1) = a.at(i, j);
  return c;
}

namespace {
struct MatchState {
  const ExactMatrix& a;
  const ExactMatrix& b;
  std::vector<std::vector<int>> cands;  // candidate b-indices per a-index
  std::vector<int> order;               // a-indices, most constrained first
  std::vector<int> image;               // a-index -> b-index or -1
  std::vector<bool> used;
};

bool match_rec(MatchState& st, std::size_t depth) {
  if (depth == st.order.size()) return true;
  const int i = st.order[depth];
  for (int j : st.cands[i]) {
    if (st.used[j]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const int i2 = st.order[d];
      const int j2 = st.image[i2];
      ok = st.a.at(i, i2) == st.b.at(j, j2) && st.a.at(i2, i) == st.b.at(j2, j);
    }
    if (!ok) continue;
    st.image[i] = j;
    st.used[j] = true;
    if (match_rec(st, depth + 1)) return true;
    st.image[i] = -1;
    st.used[j] = false;
  }
  return false;
}
}  // namespace

PermWitness are_perm_similar(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("are_perm_similar: dimension mismatch");
  const int n = a.dim();
  check_budget(n);
  if (entry_multiset(a) != entry_multiset(b)) return {std::nullopt, "entry multiset"};
  if (diagonal_multiset(a) != diagonal_multiset(b)) return {std::nullopt, "diagonal multiset"};

  // vertex profile = (diagonal value, sorted row, sorted column)
  auto profile = [](const ExactMatrix& m, int i) {
    std::vector<QuadScalar> row, col;
    for (int j = 0; j < m.dim(); ++j) {
      row.push_back(m.at(i, j));
      col.push_back(m.at(j, i));
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    return std::make_tuple(m.at(i, i), std::move(row), std::move(col));
  };
  std::vector<decltype(profile(a, 0))> pa, pb;
  for (int i = 0; i < n; ++i) {
    pa.push_back(profile(a, i));
    pb.push_back(profile(b, i));
  }
  MatchState st{a, b, {}, {}, std::vector<int>(n, -1), std::vector<bool>(n, false)};
  st.cands.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (pa[i] == pb[j]) st.cands[i].push_back(j);
    if (st.cands[i].empty()) return {std::nullopt, "row/column profile"};
  }
  st.order.resize(n);
  for (int i = 0; i < n; ++i) st.order[i] = i;
  std::stable_sort(st.order.begin(), st.order.end(),
                   [&](int l, int r) { return st.cands[l].size() < st.cands[r].size(); });
  if (!match_rec(st, 0)) return {std::nullopt, "exhausted search"};
  std::vector<int> witness(n);
  for (int i = 0; i < n; ++i) witness[i] = st.image[i] + 1;
  return {witness, ""};
}

namespace {
struct CanonState {
  const ExactMatrix& m;
  int n;
  std::vector<int> twin;
  std::vector<int> tau;  // position -> original index
  std::vector<bool> used;
  std::vector<QuadScalar> best;  // flat row-major, empty until first leaf
  bool have_best = false;
};

void canon_leaf(CanonState& st) {
  // rows >= 1 are fully determined; compare against best
  const int n = st.n;
  std::vector<QuadScalar> cand(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cand[static_cast<std::size_t>(i) * n + j] = st.m.at(st.tau[i], st.tau[j]);
  if (!st.have_best) {
    st.best = std::move(cand);
    st.have_best = true;
    return;
  }
  for (std::size_t t = 0; t < cand.size(); ++t) {
    const int c = (cand[t] - st.best[t]).sign();
    if (c < 0) {
      st.best = std::move(cand);
      return;
    }
    if (c > 0) return;
  }
}

// Positions fill in order 0..n-1 while scanning row-0 cells; at each
// cell only candidates attaining the minimal achievable value branch
// (extendability is unconstrained, so the greedy per-cell minimum is
// exactly the lexicographic minimum of row 0).
void canon_rec(CanonState& st, int pos) {
  const int n = st.n;
  if (pos == n) {
    canon_leaf(st);
    return;
  }
  std::optional<QuadScalar> minval;
  for (int v = 0; v < n; ++v) {
    if (st.used[v]) continue;
    const QuadScalar& val = (pos == 0) ? st.m.at(v, v) : st.m.at(st.tau[0], v);
    if (!minval || val < *minval) minval = val;
  }
  std::vector<bool> twin_tried(n, false);
  for (int v = 0; v < n; ++v) {
    if (st.used[v]) continue;
    const QuadScalar& val = (pos == 0) ? st.m.at(v, v) : st.m.at(st.tau[0], v);
    if (val != *minval) continue;
    if (twin_tried[st.twin[v]]) continue;
    twin_tried[st.twin[v]] = true;
    st.tau[pos] = v;
    st.used[v] = true;
    canon_rec(st, pos + 1);
    st.used[v] = false;
  }
}
}  // namespace

ExactMatrix canonical_form(const ExactMatrix& m) {
  const int n = m.dim();
  check_budget(n);
  CanonState st{m, n, twin_classes(m), std::vector<int>(n, -1), std::vector<bool>(n, false), {}, false};
  canon_rec(st, 0);
  ExactMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = st.best[static_cast<std::size_t>(i) * n + j];
  return out;
}

std::string perm_to_string(const std::vector<int>& perm) {
  std::string out = "[";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out += std::to_string(perm[i]);
    if (i + 1 < perm.size()) out += ",";
  }
  return out + "]";
}

std::vector<int> perm_from_string(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t.front() == '[') t = t.substr(1);
  if (!t.empty() && t.back() == ']') t.pop_back();
  std::vector<int> perm;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    perm.push_back(std::stoi(item));
  }
  if (perm.empty()) throw std::invalid_argument("empty permutation literal: " + s);
  return perm;
}

}  // namespace dsm
