#ifndef DSM_QUAD_HPP_
#define DSM_QUAD_HPP_

#include "dsm/rational.hpp"

#include <cstdint>
#include <string>

namespace dsm {

/// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)).
///
/// Canonical form: d is a square-free positive integer and b == 0
/// forces d == 1. A value with d == 1 is plain rational. Arithmetic
/// between elements of distinct fields (both d > 1, d1 != d2) throws
/// std::domain_error; a rational operand adopts the other side's field.
class QuadScalar {
 public:
  QuadScalar() : a_(0), b_(0), d_(1) {}
  QuadScalar(int v) : a_(v), b_(0), d_(1) {}  // NOLINT: implicit by design
  QuadScalar(Rational a) : a_(std::move(a)), b_(0), d_(1) {}
  QuadScalar(Rational a, Rational b, std::uint64_t d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  std::uint64_t radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  /// Throws std::domain_error when the value is irrational.
  const Rational& as_rational() const;

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;
  double to_double() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar l, const QuadScalar& r) { return l += r; }
  friend QuadScalar operator-(QuadScalar l, const QuadScalar& r) { return l -= r; }
  friend QuadScalar operator*(QuadScalar l, const QuadScalar& r) { return l *= r; }
  friend QuadScalar operator/(QuadScalar l, const QuadScalar& r) { return l /= r; }

  friend bool operator==(const QuadScalar& l, const QuadScalar& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.d_ == r.d_;
  }
  friend bool operator!=(const QuadScalar& l, const QuadScalar& r) { return !(l == r); }
  // total order by real value (exact sign computation)
  friend bool operator<(const QuadScalar& l, const QuadScalar& r) {
    return (l - r).sign() < 0;
  }
  friend bool operator<=(const QuadScalar& l, const QuadScalar& r) {
    return (l - r).sign() <= 0;
  }
  friend bool operator>(const QuadScalar& l, const QuadScalar& r) { return r < l; }
  friend bool operator>=(const QuadScalar& l, const QuadScalar& r) { return r <= l; }

  /// "p/q" when rational, otherwise "p/q+r/s*sqrt(d)" (or "-r/s" part).
  std::string to_string() const;

  /// sqrt of a nonnegative rational, as an exact field element.
  static QuadScalar sqrt_of(const Rational& f);

 private:
  // merged field of two operands; throws on incompatible radicands
  static std::uint64_t join(const QuadScalar& l, const QuadScalar& r);

  Rational a_, b_;
  std::uint64_t d_;
};

QuadScalar parse_scalar(const std::string& s);

}  // namespace dsm

#endif  // DSM_QUAD_HPP_
