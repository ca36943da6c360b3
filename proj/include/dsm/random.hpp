#ifndef DSM_RANDOM_HPP_
#define DSM_RANDOM_HPP_

#include "dsm/matrix.hpp"

#include <cstdint>
#include <vector>

namespace dsm {

/// splitmix64: tiny, seedable, platform-independent. Every sampling
/// routine in the library derives per-item generators from (seed,
/// index) so batch results are independent of evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0, n)
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  double unit_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// one-based image notation
  std::vector<int> permutation(int n);

 private:
  std::uint64_t state_;
};

/// Random convex combination of permutation matrices with small
/// rational weights (a random doubly stochastic matrix).
ExactMatrix random_doubly_stochastic(int n, Rng& rng, int num_terms = 0);

/// Random convex combination of symmetric permutation averages
/// (P + P^T)/2 (a random symmetric doubly stochastic matrix).
ExactMatrix random_symmetric_ds(int n, Rng& rng, int num_terms = 0);

/// Random invertible doubly quasi-stochastic rational matrix (row and
/// column sums 1, signs free).
ExactMatrix random_quasi_stochastic_invertible(int n, Rng& rng);

}  // namespace dsm

#endif  // DSM_RANDOM_HPP_
