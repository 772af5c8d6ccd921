#include "skein/affine_base.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace skein {

std::string BPoint::to_string() const { return std::to_string(m) + "," + std::to_string(n); }

std::string RationalPoint::to_string() const {
  return "(" + x.str() + ", " + y.str() + ")";
}

Matrix2 Matrix2::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (a * d - b * c != 1) throw std::invalid_argument("Matrix2: determinant must be 1");
  Matrix2 M;
  M.a = a;
  M.b = b;
  M.c = c;
  M.d = d;
  return M;
}

Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
  return Matrix2::make(l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
                       l.c * r.b + l.d * r.d);
}

bool is_canonical(BPoint p) { return p.n > 0 || (p.n == 0 && p.m >= 0); }

BPoint canonicalize(LiftVec v) {
  if (v.y < 0 || (v.y == 0 && v.x < 0)) v = -v;
  return {v.x, v.y};
}

bool is_primitive(LiftVec v) { return std::gcd(v.x, v.y) == 1; }

std::int64_t det(LiftVec a, LiftVec b) { return a.x * b.y - a.y * b.x; }
std::int64_t dot(LiftVec a, LiftVec b) { return a.x * b.x + a.y * b.y; }

std::int64_t f_norm(LiftVec v) {
  return std::max({std::llabs(v.x), std::llabs(v.y), std::llabs(v.x + v.y)});
}

LinearForm f_differential(const RationalPoint& q) {
  const int sx = q.x.sign();
  const int sy = q.y.sign();
  const int ss = Rational(q.x + q.y).sign();
  if (sx == 0 || sy == 0 || ss == 0)
    throw std::invalid_argument("f_differential: point on a cone boundary " + q.to_string());
  if (sx > 0 && sy > 0) return {1, 1};
  if (sx < 0 && sy < 0) return {-1, -1};
  if (sy > 0) return ss > 0 ? LinearForm{0, 1} : LinearForm{-1, 0};
  return ss > 0 ? LinearForm{1, 0} : LinearForm{0, -1};
}

BPoint psl2_apply(const Matrix2& M, BPoint p) { return canonicalize(M.apply(p.lift())); }

std::int64_t pairing_exponent(LiftVec s1, LiftVec s2, int twice_mu) {
  if (twice_mu != 1 && twice_mu != 2)
    throw std::invalid_argument("pairing_exponent: 2*mu must be 1 or 2");
  return twice_mu * det(s1, s2);
}

std::vector<BPoint> points_up_to(std::int64_t bound) {
  std::vector<BPoint> out;
  for (std::int64_t n = 0; n <= bound; ++n)
    for (std::int64_t m = -bound; m <= bound; ++m) {
      BPoint p{m, n};
      if (is_canonical(p) && f_norm(p) <= bound) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BPoint> primitive_directions(std::int64_t bound) {
  std::vector<BPoint> out;
  for (const auto& p : points_up_to(bound))
    if (!p.is_zero() && is_primitive(p.lift())) out.push_back(p);
  std::stable_sort(out.begin(), out.end(),
                   [](BPoint a, BPoint b) { return f_norm(a) < f_norm(b); });
  return out;
}

RayWalk walk_ray(const RationalPoint& X, LiftVec d, const std::vector<BPoint>& lines) {
  if (d.is_zero()) throw std::invalid_argument("walk_ray: zero direction");
  if (X.x == 0 && X.y == 0) throw std::invalid_argument("walk_ray: start at the origin");
  RayWalk walk;
  // X + t d meets the origin iff X is a negative multiple of d.
  std::optional<Rational> t_origin;
  const Rational cross = X.x * d.y - X.y * d.x;
  if (cross == 0) {
    const Rational along = X.x * d.x + X.y * d.y;
    if (along < 0) {
      t_origin = -along / Rational(dot(d, d));
      walk.hits_origin = true;
    }
  }
  for (const BPoint& p : lines) {
    const LiftVec v = p.lift();
    const std::int64_t denom = det(v, d);
    if (denom == 0) continue;
    const Rational t = -(v.x * X.y - v.y * X.x) / Rational(denom);
    if (t <= 0) continue;
    if (t_origin && t >= *t_origin) continue;
    RationalPoint Y(X.x + t * d.x, X.y + t * d.y);
    const Rational proj = Y.x * v.x + Y.y * v.y;
    walk.crossings.push_back({p, proj > 0 ? v : -v, std::move(Y), t});
  }
  std::sort(walk.crossings.begin(), walk.crossings.end(),
            [](const Crossing& a, const Crossing& b) {
              if (a.t != b.t) return a.t < b.t;
              return a.ray < b.ray;
            });
  return walk;
}

std::optional<std::vector<Crossing>> crossings_on_segment(const RationalPoint& X, LiftVec d,
                                                          const std::vector<BPoint>& lines) {
  RayWalk w = walk_ray(X, d, lines);
  if (w.hits_origin) return std::nullopt;
  return std::move(w.crossings);
}

ScaledWalk walk_ray_scaled(LiftVec P, LiftVec d, std::span<const BPoint> lines) {
  if (d.is_zero() || P.is_zero()) throw std::invalid_argument("walk_ray_scaled: zero vector");
  ScaledWalk walk;
  const std::int64_t cross = det(P, d);
  // Origin reached at t = -dot(P, d) / dot(d, d) when P is a negative multiple of d.
  std::int64_t o_num = 0;
  std::int64_t o_den = 1;
  if (cross == 0 && dot(P, d) < 0) {
    walk.hits_origin = true;
    o_num = -dot(P, d);
    o_den = dot(d, d);
  }
  using Wide = __int128;
  for (const BPoint& p : lines) {
    const LiftVec v = p.lift();
    std::int64_t den = det(v, d);
    if (den == 0) continue;
    std::int64_t num = -det(v, P);
    if (den < 0) {
      den = -den;
      num = -num;
    }
    if (num <= 0) continue;
    if (walk.hits_origin && Wide(num) * o_den >= Wide(o_num) * den) continue;
    // The crossing point is mu * v with mu = lambda * det(P, d) / det(v, d).
    const bool positive = (cross > 0) == (det(v, d) > 0);
    walk.hits.push_back({p, positive ? v : -v, num, den});
  }
  std::sort(walk.hits.begin(), walk.hits.end(), [](const ScaledHit& a, const ScaledHit& b) {
    const Wide l = Wide(a.num) * b.den;
    const Wide r = Wide(b.num) * a.den;
    if (l != r) return l < r;
    return a.ray < b.ray;
  });
  return walk;
}

LiftVec primitive_part(LiftVec v) {
  const std::int64_t g = std::gcd(v.x, v.y);
  if (g == 0) return v;
  return {v.x / g, v.y / g};
}

LiftVec integral_direction(const RationalPoint& q) {
  using boost::multiprecision::cpp_int;
  const cpp_int nx = numerator(q.x), dx = denominator(q.x);
  const cpp_int ny = numerator(q.y), dy = denominator(q.y);
  const cpp_int l = boost::multiprecision::lcm(dx, dy);
  cpp_int a = nx * (l / dx);
  cpp_int b = ny * (l / dy);
  const cpp_int g = boost::multiprecision::gcd(a, b);
  if (g == 0) throw std::invalid_argument("integral_direction: origin");
  a /= g;
  b /= g;
  return {a.convert_to<std::int64_t>(), b.convert_to<std::int64_t>()};
}

LiftVec cone_generator(int index) {
  switch (index) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 1};
    case 3: return {-1, 0};
  }
  throw std::out_of_range("cone_generator index");
}

ConeCoords cone_decompose(BPoint p) {
  if (!is_canonical(p)) throw std::invalid_argument("cone_decompose: non-canonical point");
  const auto m = p.m;
  const auto n = p.n;
  if (m == 0 && n == 0) return {0, 0, 0};
  if (n == 0) return {0, m, 0};
  if (m == 0) return {1, n, 0};
  if (m == -n) return {2, n, 0};
  if (m > 0) return {0, m, n};
  if (m > -n) return {1, n + m, -m};
  return {2, n, -m - n};
}

BPoint cone_compose(const ConeCoords& c) {
  return canonicalize(c.a * cone_generator(c.cone) + c.b * cone_generator(c.cone + 1));
}

namespace {
int half_plane(LiftVec v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }
}  // namespace

bool angle_less(LiftVec a, LiftVec b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return det(a, b) > 0;
}

}  // namespace skein
