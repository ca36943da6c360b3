#include "dsm/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace dsm {

QuadScalar::QuadScalar(Rational a, Rational b, std::uint64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0) throw std::domain_error("radicand must be positive");
  if (b_ == 0) {
    d_ = 1;
    return;
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    return;
  }
  // normalize the radicand to its square-free core
  SqrtDecomp sd = sqrt_decompose(Rational(d_));
  if (sd.d == 1) {  // d was a perfect square
    a_ += b_ * sd.coeff;
    b_ = 0;
    d_ = 1;
  } else {
    b_ *= sd.coeff;
    d_ = sd.d;
  }
}

const Rational& QuadScalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("irrational value used where rational required: " + to_string());
  return a_;
}

int QuadScalar::sign() const {
  if (b_ == 0) return a_.sign();
  if (a_ == 0) return b_.sign();
  const int sa = a_.sign(), sb = b_.sign();
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against b^2 d
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  if (lhs == rhs) return 0;  // impossible for square-free d > 1, kept for safety
  return lhs > rhs ? sa : sb;
}

double QuadScalar::to_double() const {
  double v = dsm::to_double(a_);
  if (b_ != 0) v += dsm::to_double(b_) * std::sqrt(static_cast<double>(d_));
  return v;
}

std::uint64_t QuadScalar::join(const QuadScalar& l, const QuadScalar& r) {
  if (l.d_ == r.d_) return l.d_;
  if (l.d_ == 1) return r.d_;
  if (r.d_ == 1) return l.d_;
  throw std::domain_error("mixing elements of distinct quadratic fields: sqrt(" +
                          std::to_string(l.d_) + ") vs sqrt(" + std::to_string(r.d_) + ")");
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar q;
  q.a_ = -a_;
  q.b_ = -b_;
  q.d_ = d_;
  return q;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  const std::uint64_t d = join(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = (b_ == 0) ? 1 : d;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  const std::uint64_t d = join(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = (b_ == 0) ? 1 : d;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  const std::uint64_t d = join(*this, o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = (b_ == 0) ? 1 : d;
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  const std::uint64_t d = join(*this, o);
  // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d)
  const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
  if (norm == 0) throw std::domain_error("division by zero norm element");
  QuadScalar inv;
  inv.a_ = o.a_ / norm;
  inv.b_ = -o.b_ / norm;
  inv.d_ = (inv.b_ == 0) ? 1 : d;
  return *this *= inv;
}

std::string QuadScalar::to_string() const {
  if (is_rational()) return dsm::to_string(a_);
  std::string out = dsm::to_string(a_);
  out += (b_ > 0) ? "+" : "-";
  Rational ab = b_ > 0 ? b_ : Rational(-b_);
  out += dsm::to_string(ab) + "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

QuadScalar QuadScalar::sqrt_of(const Rational& f) {
  SqrtDecomp sd = sqrt_decompose(f);
  if (sd.d == 1) return QuadScalar(sd.coeff);
  return QuadScalar(Rational(0), sd.coeff, sd.d);
}

QuadScalar parse_scalar(const std::string& s) {
  const auto star = s.find("*sqrt(");
  if (star == std::string::npos) return QuadScalar(parse_rational(s));
  if (s.back() != ')') throw std::invalid_argument("malformed scalar literal: " + s);
  const std::string dstr = s.substr(star + 6, s.size() - star - 7);
  std::uint64_t d = 0;
  try {
    d = std::stoull(dstr);
  } catch (...) {
    throw std::invalid_argument("malformed radicand in scalar literal: " + s);
  }
  // split "<a><sign><b>*sqrt(d)"; the sign separating a and b is the
  // last '+'/'-' before the '*' that is not a leading sign of a.
  std::string head = s.substr(0, star);
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
        head[i - 1] != '-') {
      split = i;
      break;
    }
  }
  Rational a(0), b;
  if (split == std::string::npos) {
    b = parse_rational(head);  // pure radical term "r/s*sqrt(d)"
  } else {
    a = parse_rational(head.substr(0, split));
    b = parse_rational(head.substr(split + 1));
    if (head[split] == '-') b = -b;
  }
  return QuadScalar(a, b, d);
}

}  // namespace dsm
