#ifndef DSM_RATIONAL_HPP_
#define DSM_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace dsm {

// Exact arbitrary-precision scalars. cpp_rational keeps gcd-reduced
// numerator/denominator with denominator > 0, which is exactly the
// normal form required everywhere in this library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

double to_double(const Rational& r);

/// Formats as "p/q" (always with the denominator, so round-trips are
/// canonical), e.g. "0/1", "-2/3".
std::string to_string(const Rational& r);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& s);

/// Exact decimal rendering with `places` digits after the point,
/// rounded half away from zero. Used by the lossy CSV outputs.
std::string to_decimal(const Rational& r, int places);

/// Best rational approximation to x with denominator <= max_den,
/// via continued fractions. Returns nothing for non-finite input.
std::optional<Rational> rational_from_double(double x, std::uint64_t max_den);

/// sqrt(f) = coeff * sqrt(d) with d square-free, f >= 0 rational.
struct SqrtDecomp {
  Rational coeff;
  std::uint64_t d;  // 1 when f is a perfect square
};

/// Decomposes sqrt(p/q) exactly. Square factors are stripped by trial
/// division up to 10^6; radicands whose square-freeness cannot be
/// certified at that bound (> 10^12 residual) are rejected.
/// Throws std::domain_error for negative input or oversized radicands.
SqrtDecomp sqrt_decompose(const Rational& f);

}  // namespace dsm

#endif  // DSM_RATIONAL_HPP_
