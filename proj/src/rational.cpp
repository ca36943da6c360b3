#include "dsm/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace dsm {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string to_decimal(const Rational& r, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half away from zero
  BigInt num = numerator(r) * scale * 2;
  BigInt den = denominator(r);
  BigInt q = num / den;
  if (q >= 0)
    q = (q + 1) / 2;
  else
    q = (q - 1) / 2;
  bool neg = q < 0;
  if (neg) q = -q;
  std::string digits = q.str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (neg ? "-" : "") + digits;
}

std::optional<Rational> rational_from_double(double x, std::uint64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  const bool neg = x < 0;
  double v = neg ? -x : x;
  // continued fraction convergents p/q until the denominator bound
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 1e18) break;
    BigInt a(static_cast<std::int64_t>(fl));
    BigInt p2 = a * p1 + p0;
    BigInt q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  Rational r(p1, q1);
  return neg ? Rational(-r) : r;
}

SqrtDecomp sqrt_decompose(const Rational& f) {
  if (f < 0) throw std::domain_error("sqrt of negative rational");
  if (f == 0) return {Rational(0), 1};
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt m = numerator(f) * denominator(f);
  {
    BigInt root = boost::multiprecision::sqrt(m);
    if (root * root == m) return {Rational(root, denominator(f)), 1};
  }
  constexpr std::int64_t kTrialBound = 1000000;
  BigInt outside = 1;
  BigInt inside = 1;
  BigInt p = 2;
  while (p * p <= m) {
    if (p > kTrialBound)
      throw std::domain_error("radicand too large for square-free normalization: " + m.str());
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i) outside *= p;
      if (e % 2) inside *= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  inside *= m;  // residual is 1 or prime, hence square-free
  if (inside > BigInt(1) << 62)
    throw std::domain_error("square-free radicand exceeds supported range: " + inside.str());
  return {Rational(outside, denominator(f)), inside.convert_to<std::uint64_t>()};
}

}  // namespace dsm
