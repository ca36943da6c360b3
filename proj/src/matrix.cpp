#include "dsm/matrix.hpp"

#include <stdexcept>

namespace dsm {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(static_cast<int>(rows.size())) {
  if (n_ < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  e_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("matrix rows must all have length n");
    for (const auto& v : row) e_.emplace_back(v);
  }
}

void ExactMatrix::check_same_dim(const ExactMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QuadScalar ExactMatrix::trace() const {
  QuadScalar s;
  for (int i = 0; i < n_; ++i) s += at(i, i);
  return s;
}

QuadScalar ExactMatrix::frobenius_sq() const {
  QuadScalar s;
  for (const auto& v : e_) s += v * v;
  return s;
}

bool ExactMatrix::is_rational() const {
  for (const auto& v : e_)
    if (!v.is_rational()) return false;
  return true;
}

std::uint64_t ExactMatrix::radicand() const {
  for (const auto& v : e_)
    if (v.radicand() != 1) return v.radicand();
  return 1;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  check_same_dim(o);
  ExactMatrix r(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  check_same_dim(o);
  ExactMatrix r(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  check_same_dim(o);
  ExactMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const QuadScalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

ExactMatrix operator*(const QuadScalar& s, const ExactMatrix& m) {
  ExactMatrix r(m.n_);
  for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = s * m.e_[i];
  return r;
}

std::string ExactMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    out += "[";
    for (int j = 0; j < n_; ++j) {
      out += at(i, j).to_string();
      if (j + 1 < n_) out += ", ";
    }
    out += "]\n";
  }
  return out;
}

ExactMatrix matrix_power(const ExactMatrix& m, int k) {
  if (k < 0) throw std::invalid_argument("negative matrix power");
  ExactMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i) r.at(i, i) = QuadScalar(1);
  ExactMatrix base = m;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool is_doubly_stochastic(const ExactMatrix& m) {
  const QuadScalar one(1);
  for (int i = 0; i < m.dim(); ++i) {
    QuadScalar row, col;
    for (int j = 0; j < m.dim(); ++j) {
      if (m.at(i, j).sign() < 0) return false;
      row += m.at(i, j);
      col += m.at(j, i);
    }
    if (row != one || col != one) return false;
  }
  return true;
}

bool is_doubly_quasi_stochastic(const ExactMatrix& m) {
  const QuadScalar one(1);
  for (int i = 0; i < m.dim(); ++i) {
    QuadScalar row, col;
    for (int j = 0; j < m.dim(); ++j) {
      row += m.at(i, j);
      col += m.at(j, i);
    }
    if (row != one || col != one) return false;
  }
  return true;
}

bool is_symmetric(const ExactMatrix& m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i + 1; j < m.dim(); ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

bool is_permutation_matrix(const ExactMatrix& m) {
  const QuadScalar one(1);
  for (int i = 0; i < m.dim(); ++i) {
    int row_ones = 0, col_ones = 0;
    for (int j = 0; j < m.dim(); ++j) {
      const QuadScalar& r = m.at(i, j);
      const QuadScalar& c = m.at(j, i);
      if (r == one)
        ++row_ones;
      else if (!r.is_zero())
        return false;
      if (c == one) ++col_ones;
    }
    if (row_ones != 1 || col_ones != 1) return false;
  }
  return true;
}

}  // namespace dsm
