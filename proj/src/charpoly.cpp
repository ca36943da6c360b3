#include "dsm/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsm {

QuadScalar CharPoly::eval(const QuadScalar& x) const {
  QuadScalar acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string CharPoly::to_string() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const QuadScalar& c = coeffs[k];
    if (c.is_zero() && degree() > 0) continue;
    const int s = c.sign();
    if (out.empty()) {
      if (s < 0) out += "-";
    } else {
      out += (s < 0) ? " - " : " + ";
    }
    const QuadScalar mag = (s < 0) ? -c : c;
    const bool unit = (mag == QuadScalar(1));
    if (k == 0) {
      out += mag.to_string();
    } else {
      if (!unit) out += mag.to_string() + "*";
      out += (k == 1) ? "x" : ("x^" + std::to_string(k));
    }
  }
  if (out.empty()) out = "0/1";
  return out;
}

CharPoly char_poly(const ExactMatrix& m) {
  const int n = m.dim();
  CharPoly p;
  p.coeffs.assign(n + 1, QuadScalar(0));
  p.coeffs[n] = QuadScalar(1);
  ExactMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      // M_k = M * (M_{k-1} + a_{n-k+1} I)
      ExactMatrix t = mk;
      const QuadScalar& shift = p.coeffs[n - k + 1];
      for (int i = 0; i < n; ++i) t.at(i, i) += shift;
      mk = m * t;
    }
    p.coeffs[n - k] = -(mk.trace() / QuadScalar(k));
  }
  return p;
}

bool cospectral(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("cospectral: dimension mismatch");
  return char_poly(a) == char_poly(b);
}

CharPoly poly_from_roots(const std::vector<QuadScalar>& roots) {
  CharPoly p;
  p.coeffs = {QuadScalar(1)};
  for (const auto& r : roots) {
    // multiply by (x - r)
    std::vector<QuadScalar> next(p.coeffs.size() + 1, QuadScalar(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      next[i + 1] += p.coeffs[i];
      next[i] -= r * p.coeffs[i];
    }
    p.coeffs = std::move(next);
  }
  return p;
}

std::vector<QuadScalar> closed_form_spectrum(SpectrumFamily fam, int n, const Rational& a) {
  std::vector<QuadScalar> out;
  switch (fam) {
    case SpectrumFamily::C: {
      if (n < 2) throw std::invalid_argument("C_n spectrum requires n >= 2");
      out.emplace_back(Rational(1));
      out.insert(out.end(), n - 1, QuadScalar(Rational(-1, n - 1)));
      break;
    }
    case SpectrumFamily::J: {
      out.emplace_back(Rational(1));
      out.insert(out.end(), n - 1, QuadScalar(0));
      break;
    }
    case SpectrumFamily::Identity: {
      out.insert(out.end(), n, QuadScalar(1));
      break;
    }
    case SpectrumFamily::DOfTrace: {
      if (n < 2) throw std::invalid_argument("trace-point spectrum requires n >= 2");
      if (a < 0 || a > n) throw std::invalid_argument("trace parameter out of [0, n]");
      const Rational c = (a - 1) / Rational(n - 1);
      out.emplace_back(Rational(1));
      out.insert(out.end(), n - 1, QuadScalar(c));
      break;
    }
    case SpectrumFamily::BlockJ: {
      out.emplace_back(Rational(1));
      out.insert(out.end(), 2 * n - 2, QuadScalar(0));
      out.emplace_back(Rational(-1));
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadScalar& l, const QuadScalar& r) { return r < l; });
  return out;
}

CharPoly minimal_polynomial(const ExactMatrix& m) {
  const int n = m.dim();
  const std::size_t len = static_cast<std::size_t>(n) * n;
  // Row-echelon basis over the vectorized powers I, M, M^2, ...
  std::vector<std::vector<QuadScalar>> basis;      // echelon rows
  std::vector<std::size_t> pivot;                  // pivot column per row
  std::vector<std::vector<QuadScalar>> combo;      // row = sum combo[j] * M^j
  ExactMatrix power(n);
  for (int i = 0; i < n; ++i) power.at(i, i) = QuadScalar(1);

  for (int k = 0; k <= n; ++k) {
    std::vector<QuadScalar> v(len);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] = power.at(i, j);
    std::vector<QuadScalar> c(static_cast<std::size_t>(k) + 1, QuadScalar(0));
    c[k] = QuadScalar(1);
    // reduce v against the basis
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const QuadScalar& lead = v[pivot[r]];
      if (lead.is_zero()) continue;
      const QuadScalar f = lead / basis[r][pivot[r]];
      for (std::size_t t = 0; t < len; ++t) v[t] -= f * basis[r][t];
      for (std::size_t t = 0; t < combo[r].size(); ++t) c[t] -= f * combo[r][t];
    }
    std::size_t piv = len;
    for (std::size_t t = 0; t < len; ++t)
      if (!v[t].is_zero()) {
        piv = t;
        break;
      }
    if (piv == len) {
      // M^k depends on lower powers: c holds the minimal polynomial
      CharPoly p;
      p.coeffs = std::move(c);
      const QuadScalar lead = p.coeffs.back();
      for (auto& x : p.coeffs) x /= lead;
      return p;
    }
    basis.push_back(std::move(v));
    pivot.push_back(piv);
    combo.push_back(std::move(c));
    power = power * m;
  }
  throw std::logic_error("minimal polynomial not found below degree n+1");
}

std::vector<Rational> poly_derivative(const std::vector<Rational>& p) {
  if (p.size() <= 1) return {Rational(0)};
  std::vector<Rational> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * Rational(k);
  return d;
}

namespace {
void poly_trim(std::vector<Rational>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}
}  // namespace

std::vector<Rational> poly_mul(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  std::vector<Rational> r(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  poly_trim(r);
  return r;
}

std::vector<Rational> poly_divide_exact(const std::vector<Rational>& p,
                                        const std::vector<Rational>& q) {
  std::vector<Rational> rem = p, quot(std::max<std::size_t>(p.size() - q.size() + 1, 1), Rational(0));
  poly_trim(rem);
  std::vector<Rational> d = q;
  poly_trim(d);
  if (d.size() == 1 && d[0] == 0) throw std::domain_error("polynomial division by zero");
  while (rem.size() >= d.size() && !(rem.size() == 1 && rem[0] == 0)) {
    const std::size_t shift = rem.size() - d.size();
    const Rational f = rem.back() / d.back();
    quot[shift] = f;
    for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= f * d[i];
    poly_trim(rem);
    if (rem.size() == 1 && rem[0] == 0) break;
    if (rem.size() < d.size()) break;
  }
  if (!(rem.size() == 1 && rem[0] == 0)) throw std::domain_error("polynomial division not exact");
  poly_trim(quot);
  return quot;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  poly_trim(a);
  poly_trim(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    // remainder of a by b
    std::vector<Rational> rem = a;
    while (rem.size() >= b.size() && !(rem.size() == 1 && rem[0] == 0)) {
      const std::size_t shift = rem.size() - b.size();
      const Rational f = rem.back() / b.back();
      for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
      poly_trim(rem);
    }
    a = std::move(b);
    b = std::move(rem);
  }
  // monic normalization
  if (!(a.size() == 1 && a[0] == 0)) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

namespace {
// divisors of |n| with a trial-division bound; nullopt when the
// factorization cannot be completed at desk scale
std::optional<std::vector<BigInt>> bounded_divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  std::vector<std::pair<BigInt, int>> factors;
  constexpr std::int64_t kTrialBound = 1000000;
  BigInt p = 2;
  while (p * p <= n) {
    if (p > kTrialBound) return std::nullopt;
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (const auto& [q, e] : factors) {
    const std::size_t base = divs.size();
    if (base * (e + 1) > 100000) return std::nullopt;
    BigInt pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= q;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}
}  // namespace

std::optional<std::vector<std::pair<Rational, int>>> rational_roots(
    const std::vector<Rational>& p) {
  std::vector<Rational> poly = p;
  poly_trim(poly);
  if (poly.size() == 1) return std::vector<std::pair<Rational, int>>{};
  std::vector<std::pair<Rational, int>> roots;
  // strip roots at zero
  int zero_mult = 0;
  while (poly.size() > 1 && poly[0] == 0) {
    poly.erase(poly.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (poly.size() == 1) return roots;
  // clear denominators
  BigInt lcm = 1;
  for (const auto& c : poly) {
    BigInt den = denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<BigInt> ip(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) ip[i] = numerator(poly[i] * Rational(lcm));
  const auto num_divs = bounded_divisors(ip.front());
  const auto den_divs = bounded_divisors(ip.back());
  if (!num_divs || !den_divs) return std::nullopt;
  if (num_divs->size() * den_divs->size() > 200000) return std::nullopt;
  auto eval = [](const std::vector<Rational>& q, const Rational& x) {
    Rational acc(0);
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (const BigInt& a : *num_divs)
    for (const BigInt& b : *den_divs)
      for (int s : {1, -1}) {
        const Rational cand = Rational(s * a, b);
        if (eval(poly, cand) != 0) continue;
        // already found? (unreduced duplicates collapse on the Rational)
        bool dup = false;
        for (const auto& rp : roots) dup = dup || (rp.first == cand);
        if (dup) continue;
        int mult = 0;
        std::vector<Rational> factor{-cand, Rational(1)};
        while (true) {
          try {
            poly = poly_divide_exact(poly, factor);
            ++mult;
          } catch (const std::domain_error&) {
            break;
          }
        }
        roots.emplace_back(cand, mult);
        if (poly.size() == 1) return roots;
      }
  return roots;
}

}  // namespace dsm
