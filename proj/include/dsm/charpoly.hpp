#ifndef DSM_CHARPOLY_HPP_
#define DSM_CHARPOLY_HPP_

#include "dsm/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dsm {

/// Monic characteristic polynomial, coefficients stored constant term
/// first (coeffs[k] multiplies lambda^k, coeffs[degree] == 1).
struct CharPoly {
  std::vector<QuadScalar> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  QuadScalar eval(const QuadScalar& x) const;
  std::string to_string() const;  // e.g. "x^3 - 1/3*x^2 - 2/3*x"

  friend bool operator==(const CharPoly& a, const CharPoly& b) = default;
};

/// det(lambda*I - M) by the Faddeev-LeVerrier recurrence, exact.
CharPoly char_poly(const ExactMatrix& m);

bool cospectral(const ExactMatrix& a, const ExactMatrix& b);

/// Monic polynomial with the given roots (constant-first coefficients).
CharPoly poly_from_roots(const std::vector<QuadScalar>& roots);

enum class SpectrumFamily { C, J, Identity, DOfTrace, BlockJ };

/// Closed-form eigenvalue multisets of the named families, sorted
/// descending. `n` is the matrix dimension except for BlockJ where it
/// is the half-block size m (matrix dimension 2m). `a` is read only
/// for DOfTrace.
std::vector<QuadScalar> closed_form_spectrum(SpectrumFamily fam, int n,
                                             const Rational& a = Rational(0));

/// Minimal polynomial of M over its entry field (monic, constant first).
CharPoly minimal_polynomial(const ExactMatrix& m);

// -- polynomial utilities over the rationals (constant-first vectors) --

std::vector<Rational> poly_derivative(const std::vector<Rational>& p);
/// Quotient of exact division; throws when not divisible.
std::vector<Rational> poly_divide_exact(const std::vector<Rational>& p,
                                        const std::vector<Rational>& q);
std::vector<Rational> poly_mul(const std::vector<Rational>& p, const std::vector<Rational>& q);
/// Monic gcd via the Euclidean algorithm over Q.
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b);

/// All rational roots with multiplicity, found by bounded divisor
/// enumeration on the cleared-denominator polynomial. Returns nothing
/// when the coefficient factorizations exceed the trial bound.
std::optional<std::vector<std::pair<Rational, int>>> rational_roots(
    const std::vector<Rational>& p);

}  // namespace dsm

#endif  // DSM_CHARPOLY_HPP_
