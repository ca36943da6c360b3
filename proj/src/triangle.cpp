#include "dsm/triangle.hpp"

#include "dsm/charpoly.hpp"
#include "dsm/families.hpp"
#include "dsm/permsim.hpp"

#include <stdexcept>

namespace dsm {

bool in_domain(const TriPoint& p) {
  return p.x >= 0 && p.x <= 1 && p.y >= 0 && p.y <= 1 && p.x + p.y >= 0 && p.x + p.y <= 1;
}

namespace {
void require_domain(const TriPoint& p) {
  if (!in_domain(p))
    throw std::invalid_argument("(" + to_string(p.x) + ", " + to_string(p.y) +
                                ") outside the barycentric domain");
}

void require_sym_ds3(const ExactMatrix& m) {
  if (m.dim() != 3) throw std::invalid_argument("expected a 3x3 matrix");
  if (!is_symmetric(m) || !is_doubly_stochastic(m))
    throw std::invalid_argument("expected a symmetric doubly stochastic matrix");
}
}  // namespace

Rational tri_f(const TriPoint& p) {
  require_domain(p);
  const Rational &x = p.x, &y = p.y;
  return 3 * x * x + 3 * y * y + 3 * x * y + 1 - 3 * x - 3 * y;
}

ExactMatrix tri_to_matrix(const TriPoint& p) {
  require_domain(p);
  const Rational z = 1 - p.x - p.y;
  return ExactMatrix{{p.x, z, p.y}, {z, p.y, p.x}, {p.y, p.x, z}};
}

std::array<QuadScalar, 3> tri_eigenvalues(const TriPoint& p) {
  const QuadScalar root = QuadScalar::sqrt_of(tri_f(p));
  return {QuadScalar(1), root, -root};
}

FExtrema f_extrema(int grid) {
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 points per side");
  FExtrema out;
  // interior critical system: f_x = 6x + 3y - 3 = 0, f_y = 3x + 6y - 3 = 0
  {
    const Rational a11 = 6, a12 = 3, a21 = 3, a22 = 6, r1 = 3, r2 = 3;
    const Rational det = a11 * a22 - a12 * a21;
    out.interior_critical = {(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
    out.interior_value = tri_f(out.interior_critical);
  }
  // boundary restrictions are quadratics q(s) = as^2 + bs + c on [0,1];
  // stationary point s = -b/(2a)
  auto edge_critical = [&](const Rational& a, const Rational& b, auto to_point) {
    const Rational s = -b / (2 * a);
    if (s >= 0 && s <= 1) {
      const TriPoint p = to_point(s);
      out.boundary_critical.emplace_back(p, tri_f(p));
    }
  };
  // f(x,0) = 3x^2 - 3x + 1
  edge_critical(3, -3, [](const Rational& s) { return TriPoint{s, Rational(0)}; });
  // f(0,y) = 3y^2 - 3y + 1
  edge_critical(3, -3, [](const Rational& s) { return TriPoint{Rational(0), s}; });
  // f(x,1-x) = 3x^2 - 3x + 1
  edge_critical(3, -3, [](const Rational& s) { return TriPoint{s, 1 - s}; });
  for (const TriPoint& corner : {TriPoint{Rational(0), Rational(0)}, TriPoint{Rational(1), Rational(0)},
                                 TriPoint{Rational(0), Rational(1)}})
    out.corner_values.emplace_back(corner, tri_f(corner));

  bool first = true;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; i + j < grid; ++j) {
      const TriPoint p{Rational(i, grid - 1), Rational(j, grid - 1)};
      const Rational v = tri_f(p);
      if (first || v < out.grid_min) out.grid_min = v;
      if (first || v > out.grid_max) out.grid_max = v;
      first = false;
    }
  return out;
}

std::pair<TriPoint, SliceLift> project_to_slice1(const ExactMatrix& m) {
  require_sym_ds3(m);
  if (!m.is_rational())
    throw std::invalid_argument("slice projection is defined for rational matrices");
  const Rational a = m.trace().as_rational();
  if (a == 0)
    throw std::invalid_argument("the zero-trace slice point cannot be projected through itself");
  if (a == 3) {
    // the identity: by convention projected to J_3 along [I, C]
    return {TriPoint{Rational(1, 3), Rational(1, 3)}, SliceLift{SliceCenter::Identity, Rational(1), true}};
  }
  SliceLift lift;
  lift.identity_input = false;
  if (a >= 1) {
    lift.center = SliceCenter::Identity;
    lift.t = Rational(2) / (3 - a);
  } else {
    lift.center = SliceCenter::C;
    lift.t = Rational(1) / a;
  }
  const ExactMatrix center = lift.center == SliceCenter::Identity ? mat_identity(3) : mat_C(3);
  const QuadScalar w{1 - lift.t};
  ExactMatrix s(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.at(i, j) = w * center.at(i, j) + QuadScalar(lift.t) * m.at(i, j);
  // a trace-1 symmetric doubly stochastic 3x3 matrix reads its
  // barycentric coordinates off the first two diagonal entries
  return {TriPoint{s.at(0, 0).as_rational(), s.at(1, 1).as_rational()}, lift};
}

ExactMatrix unlift(const ExactMatrix& slice_matrix, const SliceLift& lift) {
  if (lift.identity_input) return mat_identity(3);
  const ExactMatrix center = lift.center == SliceCenter::Identity ? mat_identity(3) : mat_C(3);
  const QuadScalar w{1 - lift.t};
  const QuadScalar inv_t = QuadScalar(1) / QuadScalar(lift.t);
  ExactMatrix m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m.at(i, j) = (slice_matrix.at(i, j) - w * center.at(i, j)) * inv_t;
  return m;
}

std::string segment_name(Segment3 s) {
  switch (s) {
    case Segment3::IX: return "[I,X]";
    case Segment3::IY: return "[I,Y]";
    case Segment3::IZ: return "[I,Z]";
    case Segment3::CX: return "[C,X]";
    case Segment3::CY: return "[C,Y]";
    case Segment3::CZ: return "[C,Z]";
    case Segment3::IC: return "[I,C]";
  }
  throw std::logic_error("unreachable segment name");
}

std::pair<ExactMatrix, ExactMatrix> segment_endpoints(Segment3 s) {
  switch (s) {
    case Segment3::IX: return {mat_identity(3), vertex_X()};
    case Segment3::IY: return {mat_identity(3), vertex_Y()};
    case Segment3::IZ: return {mat_identity(3), vertex_Z()};
    case Segment3::CX: return {mat_C(3), vertex_X()};
    case Segment3::CY: return {mat_C(3), vertex_Y()};
    case Segment3::CZ: return {mat_C(3), vertex_Z()};
    case Segment3::IC: return {mat_identity(3), mat_C(3)};
  }
  throw std::logic_error("unreachable segment endpoints");
}

namespace {
// exact membership of m on [e1, e2]: the parameter from a separating
// entry must reproduce every entry and lie in [0,1]
std::optional<Rational> on_segment(const ExactMatrix& m, const ExactMatrix& e1,
                                   const ExactMatrix& e2) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (e1.at(i, j) == e2.at(i, j)) continue;
      const QuadScalar t = (m.at(i, j) - e1.at(i, j)) / (e2.at(i, j) - e1.at(i, j));
      if (!t.is_rational()) return std::nullopt;
      const Rational tr = t.as_rational();
      if (tr < 0 || tr > 1) return std::nullopt;
      if (segment_point(e1, e2, tr) == m) return tr;
      return std::nullopt;
    }
  return std::nullopt;  // e1 == e2 cannot happen for the seven segments
}
}  // namespace

Classification3 classify3(const ExactMatrix& m) {
  require_sym_ds3(m);
  if (!m.is_rational())
    throw std::invalid_argument("classification is defined for rational matrices");
  Classification3 out;
  out.trace = m.trace().as_rational();

  // slice projection (convention (1/3,1/3) for the two apex cases)
  if (out.trace == 0)
    out.slice_point = TriPoint{Rational(1, 3), Rational(1, 3)};
  else
    out.slice_point = project_to_slice1(m).first;
  // ray parameter when the slice point sits on a [J, vertex] ray
  {
    const Rational &x = out.slice_point.x, &y = out.slice_point.y;
    const Rational z = 1 - x - y;
    if (y == z) {  // [J, X]: (x, y) = ((1+2d)/3, (1-d)/3)
      const Rational d = (3 * x - 1) / 2;
      if (d >= 0 && d <= 1) out.ray_param = QuadScalar(d);
    } else if (x == z) {  // [J, Y]
      const Rational d = (3 * y - 1) / 2;
      if (d >= 0 && d <= 1) out.ray_param = QuadScalar(d);
    } else if (x == y) {  // [J, Z]
      const Rational d = 1 - 3 * x;
      if (d >= 0 && d <= 1) out.ray_param = QuadScalar(d);
    }
  }

  // the apexes are fixed points of the classification, on [I, C]
  if (m == mat_identity(3)) {
    out.segment = {Segment3::IC, Rational(0)};
    return out;
  }
  if (m == mat_C(3)) {
    out.segment = {Segment3::IC, Rational(1)};
    return out;
  }
  for (Segment3 s : {Segment3::IX, Segment3::IY, Segment3::IZ, Segment3::CX, Segment3::CY,
                     Segment3::CZ, Segment3::IC}) {
    const auto [e1, e2] = segment_endpoints(s);
    if (auto t = on_segment(m, e1, e2)) {
      out.segment = {s, *t};
      return out;
    }
  }
  return out;
}

namespace {
// Stern-Brocot breadth-first enumeration of positive rationals,
// interleaved with negatives and preceded by slope 0 and the vertical
// direction; a fixed deterministic order for the chord search.
struct SlopeSeq {
  std::vector<std::pair<Rational, bool>> slopes;  // (slope, is_vertical)
  explicit SlopeSeq(int count) {
    slopes.emplace_back(Rational(0), false);
    slopes.emplace_back(Rational(0), true);  // vertical
    std::vector<std::pair<std::pair<BigInt, BigInt>, std::pair<BigInt, BigInt>>> frontier{
        {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}};
    while (static_cast<int>(slopes.size()) < count) {
      std::vector<decltype(frontier)::value_type> next;
      for (const auto& [lo, hi] : frontier) {
        const BigInt mn = lo.first + hi.first, md = lo.second + hi.second;
        const Rational q(mn, md);
        slopes.emplace_back(q, false);
        slopes.emplace_back(-q, false);
        if (static_cast<int>(slopes.size()) >= count) break;
        next.push_back({lo, {mn, md}});
        next.push_back({{mn, md}, hi});
      }
      frontier = std::move(next);
    }
  }
};

// rational chord intersections of the level conic f = level through a
// rational point p0 already on it
std::vector<TriPoint> conic_points_from(const TriPoint& p0, const Rational& level, int count) {
  std::vector<TriPoint> pts{p0};
  auto push_unique = [&pts](const TriPoint& p) {
    for (const auto& q : pts)
      if (q == p) return;
    pts.push_back(p);
  };
  const Rational fx = 6 * p0.x + 3 * p0.y - 3;
  const Rational fy = 3 * p0.x + 6 * p0.y - 3;
  SlopeSeq seq(4 * count + 16);
  for (const auto& [m, vertical] : seq.slopes) {
    if (static_cast<int>(pts.size()) >= count) break;
    Rational s;
    TriPoint p;
    if (vertical) {
      // direction (0,1): A = 3, B = f_y
      s = -fy / 3;
      p = {p0.x, p0.y + s};
    } else {
      const Rational a = 3 * (m * m + m + 1);
      const Rational b = fx + m * fy;
      s = -b / a;
      p = {p0.x + s, p0.y + m * s};
    }
    if (s == 0) continue;
    if (!in_domain(p)) continue;
    if (tri_f(p) != level) throw std::logic_error("chord landed off the level conic");
    push_unique(p);
  }
  return pts;
}
}  // namespace

std::vector<TriPoint> level_curve_points(const Rational& d, int count) {
  if (d <= 0 || d >= 1) throw std::invalid_argument("level parameter must satisfy 0 < d < 1");
  if (count < 1) return {};
  const Rational level = d * d;
  // both x = y pivots satisfy (3x-1)^2 = d^2; the low one always lies
  // inside D, the high one only for d <= 1/2
  const TriPoint low{(1 - d) / 3, (1 - d) / 3};
  const TriPoint high{(1 + d) / 3, (1 + d) / 3};
  std::vector<TriPoint> pts = conic_points_from(low, level, count);
  if (in_domain(high)) {
    bool seen = false;
    for (const auto& q : pts) seen = seen || (q == high);
    if (!seen) pts.insert(pts.begin() + 1, high);
  }
  if (static_cast<int>(pts.size()) > count) pts.resize(count);
  return pts;
}

namespace {
ExactMatrix ray_matrix(const ExactMatrix& vertex, const QuadScalar& d) {
  // d*vertex + (1-d)*J_3
  const ExactMatrix j = mat_J(3);
  const QuadScalar w = QuadScalar(1) - d;
  ExactMatrix out(3);
  for (int i = 0; i < 3; ++i)
    for (int j2 = 0; j2 < 3; ++j2) out.at(i, j2) = d * vertex.at(i, j2) + w * j.at(i, j2);
  return out;
}

// slice matrix of m under the exact central projection (no rationality
// requirement on the entries; the trace must still be rational)
ExactMatrix slice_matrix_of(const ExactMatrix& m, SliceLift& lift_out) {
  const QuadScalar tr = m.trace();
  if (!tr.is_rational())
    throw std::domain_error("matrices with irrational trace are outside the supported field");
  const Rational a = tr.as_rational();
  if (a == 0 || a == 3) throw std::logic_error("apex matrices are determined by their spectra");
  lift_out.identity_input = false;
  if (a >= 1) {
    lift_out.center = SliceCenter::Identity;
    lift_out.t = Rational(2) / (3 - a);
  } else {
    lift_out.center = SliceCenter::C;
    lift_out.t = Rational(1) / a;
  }
  const ExactMatrix center = lift_out.center == SliceCenter::Identity ? mat_identity(3) : mat_C(3);
  const QuadScalar w{1 - lift_out.t};
  ExactMatrix s(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.at(i, j) = w * center.at(i, j) + QuadScalar(lift_out.t) * m.at(i, j);
  return s;
}

// the mate in the trace-1 slice for a slice matrix on a [J, vertex]
// ray at parameter d with rational d^2: the first rational conic point
// that is not a permutation image
ExactMatrix on_ray_slice_mate(const ExactMatrix& slice, const QuadScalar& d) {
  const QuadScalar dsq_q = d * d;
  if (!dsq_q.is_rational())
    throw std::domain_error("ray parameter with irrational square is outside the supported field");
  const Rational dsq = dsq_q.as_rational();
  constexpr int kChordBudget = 1000;
  std::vector<TriPoint> candidates;
  if (d.is_rational()) {
    candidates = level_curve_points(d.as_rational(), kChordBudget);
  } else {
    // no rational pivot on x = y; scan small-denominator x for a
    // rational chord anchor (discriminant of f(x, .) = d^2 a square)
    for (int q = 1; q <= 60 && candidates.empty(); ++q)
      for (int i = 0; i <= q && candidates.empty(); ++i) {
        const Rational x(i, q);
        // 3y^2 + 3(x-1)y + (3x^2 + 1 - 3x - dsq) = 0
        const Rational disc = 9 * (x - 1) * (x - 1) - 12 * (3 * x * x + 1 - 3 * x - dsq);
        if (disc < 0) continue;
        const SqrtDecomp sd = sqrt_decompose(disc);
        if (sd.d != 1) continue;
        const Rational y = (-3 * (x - 1) + sd.coeff) / 6;
        const TriPoint p{x, y};
        if (in_domain(p) && tri_f(p) == dsq) candidates = conic_points_from(p, dsq, kChordBudget);
      }
    if (candidates.empty())
      throw std::domain_error("no rational anchor found on the level conic");
  }
  for (const auto& p : candidates) {
    const ExactMatrix k = tri_to_matrix(p);
    if (k == slice) continue;
    if (slice.is_rational()) {
      if (are_perm_similar(slice, k).perm) continue;
    }
    // irrational slice matrices share no entries with a rational
    // candidate, so permutation similarity is impossible
    return k;
  }
  throw std::logic_error("chord budget exhausted without a mate; this must not happen");
}
}  // namespace

ExactMatrix mate_for(const ExactMatrix& m) {
  require_sym_ds3(m);
  ExactMatrix mate = mat_J(3);  // placeholder, overwritten below
  if (m.is_rational()) {
    const Classification3 cls = classify3(m);
    if (cls.segment)
      throw std::invalid_argument("matrix is determined by its spectra; no mate exists");
    SliceLift lift;
    const ExactMatrix slice = slice_matrix_of(m, lift);
    if (cls.ray_param) {
      mate = unlift(on_ray_slice_mate(slice, *cls.ray_param), lift);
    } else {
      // generic point: alpha*X + (1-alpha)*J_3 with alpha = sqrt(f)
      const QuadScalar alpha = QuadScalar::sqrt_of(tri_f(cls.slice_point));
      mate = unlift(ray_matrix(vertex_X(), alpha), lift);
    }
  } else {
    // irrational input: supported when the slice matrix lies on a
    // [J, vertex] ray with rational squared parameter (the shape of
    // every mate this module itself constructs)
    SliceLift lift;
    const ExactMatrix slice = slice_matrix_of(m, lift);
    std::optional<QuadScalar> ray_d;
    for (const ExactMatrix& v : {vertex_X(), vertex_Y(), vertex_Z()}) {
      // solve slice = d*v + (1-d)*J on an entry where v is 1
      for (int i = 0; i < 3 && !ray_d; ++i)
        for (int j = 0; j < 3 && !ray_d; ++j)
          if (v.at(i, j) == QuadScalar(1)) {
            const QuadScalar d = (slice.at(i, j) - QuadScalar(Rational(1, 3))) * QuadScalar(Rational(3, 2));
            if (ray_matrix(v, d) == slice && d.sign() > 0 && (QuadScalar(1) - d).sign() > 0)
              ray_d = d;
          }
      if (ray_d) break;
    }
    if (!ray_d)
      throw std::domain_error("matrix is outside the field supported for mate construction");
    mate = unlift(on_ray_slice_mate(slice, *ray_d), lift);
  }
  // hard postcondition: exact cospectrality, no permutation witness
  if (!is_symmetric(mate) || !is_doubly_stochastic(mate))
    throw std::logic_error("constructed mate left the symmetric doubly stochastic polytope");
  if (!cospectral(m, mate)) throw std::logic_error("constructed mate is not cospectral");
  if (m.is_rational() && mate.is_rational() && are_perm_similar(m, mate).perm)
    throw std::logic_error("constructed mate is a permutation image");
  return mate;
}

Rational hw_inequality(const std::vector<Rational>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 1 || lambda[0] != 1) throw std::invalid_argument("spectrum must start at lambda_1 = 1");
  for (int i = 0; i < n; ++i) {
    if (lambda[i] < -1 || lambda[i] > 1) throw std::invalid_argument("eigenvalues must lie in [-1, 1]");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw std::invalid_argument("spectrum must be sorted descending");
  }
  Rational v(1, n);
  for (int k = 2; k <= n; ++k) v += lambda[k - 1] / Rational((n - k + 2) * (n - k + 1));
  return v;
}

}  // namespace dsm
