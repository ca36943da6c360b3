#ifndef DSM_MATRIX_HPP_
#define DSM_MATRIX_HPP_

#include "dsm/quad.hpp"

#include <initializer_list>
#include <vector>

namespace dsm {

/// Dense square matrix over QuadScalar (rationals embed as b = 0).
/// Values are immutable in spirit: all operations return new matrices.
class ExactMatrix {
 public:
  explicit ExactMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  }
  /// Row-major construction from rationals, e.g. {{0,1},{1,0}}.
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  int dim() const { return n_; }
  const QuadScalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  QuadScalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  ExactMatrix transpose() const;
  QuadScalar trace() const;
  /// Sum of squared entries (Frobenius norm squared), exact.
  QuadScalar frobenius_sq() const;

  /// true when every entry is rational (no radical part anywhere).
  bool is_rational() const;
  /// The one radicand d > 1 present in the entries, or 1. Mixed
  /// radicands cannot occur (entry arithmetic rejects them).
  std::uint64_t radicand() const;

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  friend ExactMatrix operator*(const QuadScalar& s, const ExactMatrix& m);

  friend bool operator==(const ExactMatrix& l, const ExactMatrix& r) {
    return l.n_ == r.n_ && l.e_ == r.e_;
  }
  friend bool operator!=(const ExactMatrix& l, const ExactMatrix& r) { return !(l == r); }

  std::string to_string() const;  // human-readable, row per line

 private:
  void check_same_dim(const ExactMatrix& o) const;
  int n_;
  std::vector<QuadScalar> e_;
};

ExactMatrix matrix_power(const ExactMatrix& m, int k);

bool is_doubly_stochastic(const ExactMatrix& m);
bool is_doubly_quasi_stochastic(const ExactMatrix& m);
bool is_symmetric(const ExactMatrix& m);
/// Entries all 0/1 with exactly one 1 per row and column.
bool is_permutation_matrix(const ExactMatrix& m);

}  // namespace dsm

#endif  // DSM_MATRIX_HPP_
