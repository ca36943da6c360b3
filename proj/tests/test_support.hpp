#ifndef DSM_TESTS_TEST_SUPPORT_HPP_
#define DSM_TESTS_TEST_SUPPORT_HPP_

#include "dsm/families.hpp"
#include "dsm/matrix.hpp"
#include "dsm/rational.hpp"

#include <string>
#include <vector>

namespace dsm::test {

inline Rational rat(const std::string& s) { return parse_rational(s); }

inline ExactMatrix from_rows(const std::vector<std::vector<std::string>>& rows) {
  ExactMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) m.at(i, j) = QuadScalar(parse_rational(rows[i][j]));
  return m;
}

/// The 3x3 counterexample matrix with spectrum (1, 0, -2/3).
inline ExactMatrix counterexample3() {
  return from_rows({{"0", "2/3", "1/3"}, {"2/3", "0", "1/3"}, {"1/3", "1/3", "1/3"}});
}

}  // namespace dsm::test

#endif  // DSM_TESTS_TEST_SUPPORT_HPP_
