#ifndef DSM_SIMILARITY_HPP_
#define DSM_SIMILARITY_HPP_

#include "dsm/charpoly.hpp"
#include "dsm/matrix.hpp"

#include <stdexcept>

namespace dsm {

/// Raised when the similarity decision would require factoring an
/// irreducible factor of degree >= 3 (out of desk scope): the pair is
/// cospectral with equal minimal polynomials, but no verdict is safe.
struct SimilarityUndecided : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact similarity over Q for matrices with rational entries.
///
/// Decision: equal characteristic polynomials, then (symmetric pairs)
/// cospectrality alone, then equal minimal polynomials and, for every
/// irreducible factor obtained from rational-root extraction plus
/// square-free splitting, equal ranks of f(A)^j and f(B)^j for
/// j = 1..n. Throws SimilarityUndecided when an unfactorable cubic or
/// larger factor blocks the rank test.
bool are_similar_exact(const ExactMatrix& a, const ExactMatrix& b);

/// det([[A,B],[C,D]]) computed both directly and as det(AD - CB)
/// (valid when AC = CA; rejected otherwise). The two routes must agree
/// exactly; disagreement raises std::logic_error.
QuadScalar block_det(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                     const ExactMatrix& d);

/// f(M) for a constant-first rational coefficient vector.
ExactMatrix poly_eval_matrix(const std::vector<Rational>& f, const ExactMatrix& m);

}  // namespace dsm

#endif  // DSM_SIMILARITY_HPP_
