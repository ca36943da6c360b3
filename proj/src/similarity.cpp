#include "dsm/similarity.hpp"
#include "dsm/permsim.hpp"

#include "dsm/families.hpp"

#include <algorithm>

namespace dsm {

ExactMatrix poly_eval_matrix(const std::vector<Rational>& f, const ExactMatrix& m) {
  const int n = m.dim();
  ExactMatrix acc(n);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * m;
    const QuadScalar c{*it};
    for (int i = 0; i < n; ++i) acc.at(i, i) += c;
  }
  return acc;
}

namespace {
std::vector<Rational> to_rational_poly(const CharPoly& p) {
  std::vector<Rational> out(p.coeffs.size());
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) out[i] = p.coeffs[i].as_rational();
  return out;
}

// distinct irreducible factors (degree 1 or 2) of p, or nullopt when
// the factorization is out of reach
std::optional<std::vector<std::vector<Rational>>> irreducible_factors(
    const std::vector<Rational>& p) {
  auto roots = rational_roots(p);
  if (!roots) return std::nullopt;
  std::vector<std::vector<Rational>> factors;
  std::vector<Rational> residual = p;
  for (const auto& [r, mult] : *roots) {
    const std::vector<Rational> lin{-r, Rational(1)};
    factors.push_back(lin);
    for (int k = 0; k < mult; ++k) residual = poly_divide_exact(residual, lin);
  }
  // split the rational-root-free residual into square-free parts; a
  // part of degree 2 is irreducible over Q, anything bigger cannot be
  // split by this method
  while (residual.size() > 1) {
    std::vector<Rational> g = poly_gcd(residual, poly_derivative(residual));
    std::vector<Rational> sqfree = poly_divide_exact(residual, g);
    if (sqfree.size() == 3)
      factors.push_back(sqfree);
    else if (sqfree.size() != 1)
      return std::nullopt;
    residual = std::move(g);
  }
  // dedup factors (same quadratic may re-appear from repeated parts)
  std::sort(factors.begin(), factors.end());
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  return factors;
}
}  // namespace

bool are_similar_exact(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("are_similar_exact: dimension mismatch");
  if (!a.is_rational() || !b.is_rational())
    throw std::invalid_argument("are_similar_exact requires rational entries");
  const CharPoly pa = char_poly(a);
  if (pa != char_poly(b)) return false;
  // cospectral symmetric real matrices are similar (both diagonalizable)
  if (is_symmetric(a) && is_symmetric(b)) return true;
  // permutation similarity is similarity; cheap to decide at small n
  if (a.dim() <= 12 && are_perm_similar(a, b).perm) return true;
  const CharPoly ma = minimal_polynomial(a);
  const CharPoly mb = minimal_polynomial(b);
  if (ma != mb) return false;
  const int n = a.dim();
  auto factors = irreducible_factors(to_rational_poly(pa));
  if (!factors)
    throw SimilarityUndecided(
        "cospectral with equal minimal polynomials, but the characteristic polynomial has an "
        "unfactorable component; similarity undecided");
  for (const auto& f : *factors) {
    ExactMatrix fa = poly_eval_matrix(f, a);
    ExactMatrix fb = poly_eval_matrix(f, b);
    ExactMatrix pa_pow = fa, pb_pow = fb;
    for (int j = 1; j <= n; ++j) {
      const int ra = rank(pa_pow);
      const int rb = rank(pb_pow);
      if (ra != rb) return false;
      if (ra == 0 || j == n) break;
      pa_pow = pa_pow * fa;
      pb_pow = pb_pow * fb;
    }
  }
  return true;
}

QuadScalar block_det(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                     const ExactMatrix& d) {
  const int n = a.dim();
  if (b.dim() != n || c.dim() != n || d.dim() != n)
    throw std::invalid_argument("block_det blocks must share one square size");
  if (a * c != c * a) throw std::invalid_argument("block_det requires AC = CA");
  ExactMatrix big(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      big.at(i, j) = a.at(i, j);
      big.at(i, n + j) = b.at(i, j);
      big.at(n + i, j) = c.at(i, j);
      big.at(n + i, n + j) = d.at(i, j);
    }
  const QuadScalar direct = determinant(big);
  const QuadScalar via_identity = determinant(a * d - c * b);
  if (direct != via_identity)
    throw std::logic_error("block determinant identity violated: " + direct.to_string() +
                           " != " + via_identity.to_string());
  return direct;
}

}  // namespace dsm
