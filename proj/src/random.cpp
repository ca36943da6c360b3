#include "dsm/random.hpp"

#include "dsm/families.hpp"

namespace dsm {

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
  return p;
}

namespace {
ExactMatrix random_combo(int n, Rng& rng, int num_terms, bool symmetrize) {
  if (num_terms <= 0) num_terms = n + 1;
  std::vector<Rational> weights(num_terms);
  Rational total(0);
  for (auto& w : weights) {
    w = Rational(1 + rng.below(16));
    total += w;
  }
  ExactMatrix acc(n);
  for (int t = 0; t < num_terms; ++t) {
    ExactMatrix p = permutation_matrix(rng.permutation(n));
    if (symmetrize) p = QuadScalar(Rational(1, 2)) * (p + p.transpose());
    acc = acc + (QuadScalar(weights[t] / total) * p);
  }
  return acc;
}
}  // namespace

ExactMatrix random_doubly_stochastic(int n, Rng& rng, int num_terms) {
  return random_combo(n, rng, num_terms, false);
}

ExactMatrix random_symmetric_ds(int n, Rng& rng, int num_terms) {
  return random_combo(n, rng, num_terms, true);
}

ExactMatrix random_quasi_stochastic_invertible(int n, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ExactMatrix m(n);
    // free block, then balance the last row and column
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j + 1 < n; ++j)
        m.at(i, j) = QuadScalar(Rational(rng.below(9) - 4, 1 + rng.below(4)));
    for (int i = 0; i + 1 < n; ++i) {
      QuadScalar row;
      for (int j = 0; j + 1 < n; ++j) row += m.at(i, j);
      m.at(i, n - 1) = QuadScalar(1) - row;
    }
    for (int j = 0; j < n; ++j) {
      QuadScalar col;
      for (int i = 0; i + 1 < n; ++i) col += m.at(i, j);
      m.at(n - 1, j) = QuadScalar(1) - col;
    }
    if (!determinant(m).is_zero()) return m;
  }
  throw std::runtime_error("failed to sample an invertible quasi-stochastic matrix");
}

}  // namespace dsm
