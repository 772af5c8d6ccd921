#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skein {

using Rational = boost::multiprecision::cpp_rational;

/// Integer vector in the double cover Z^2 (not reduced modulo -1).
struct LiftVec {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LiftVec&, const LiftVec&) = default;
  LiftVec operator-() const { return {-x, -y}; }
  friend LiftVec operator+(LiftVec a, LiftVec b) { return {a.x + b.x, a.y + b.y}; }
  friend LiftVec operator-(LiftVec a, LiftVec b) { return {a.x - b.x, a.y - b.y}; }
  friend LiftVec operator*(std::int64_t k, LiftVec v) { return {k * v.x, k * v.y}; }
  bool is_zero() const { return x == 0 && y == 0; }
};

/// Canonical integral point of B = R^2 / {+-1}: n > 0, or n = 0 and m >= 0.
struct BPoint {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend auto operator<=>(const BPoint&, const BPoint&) = default;
  LiftVec lift() const { return {m, n}; }
  bool is_zero() const { return m == 0 && n == 0; }
  std::string to_string() const;
};

/// Point of R^2 with exact rational coordinates.
struct RationalPoint {
  Rational x;
  Rational y;

  RationalPoint() = default;
  RationalPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit RationalPoint(LiftVec v) : x(v.x), y(v.y) {}
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  std::string to_string() const;
};

/// Integer 2x2 matrix [[a, b], [c, d]] with determinant 1.
struct Matrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Matrix2 make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static Matrix2 identity() { return {}; }
  static Matrix2 S() { return make(0, -1, 1, 1); }
  static Matrix2 T() { return make(1, 1, 0, 1); }
  friend Matrix2 operator*(const Matrix2& l, const Matrix2& r);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
  LiftVec apply(LiftVec v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};

inline constexpr BPoint kV1{1, 0};
inline constexpr BPoint kV2{0, 1};
inline constexpr BPoint kV3{-1, 1};

bool is_canonical(BPoint p);
BPoint canonicalize(LiftVec v);
/// gcd(|x|, |y|) == 1.
bool is_primitive(LiftVec v);

std::int64_t det(LiftVec a, LiftVec b);
std::int64_t dot(LiftVec a, LiftVec b);

/// F on the double cover: max(|x|, |y|, |x + y|).
std::int64_t f_norm(LiftVec v);
inline std::int64_t f_norm(BPoint p) { return f_norm(p.lift()); }

/// Linear form a*x + b*y that agrees with F on a cone of linearity.
struct LinearForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t operator()(LiftVec v) const { return a * v.x + b * v.y; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// The linear form of F on the open cone containing q. Throws
/// std::invalid_argument if q lies on one of the lines x = 0, y = 0, x + y = 0.
LinearForm f_differential(const RationalPoint& q);

BPoint psl2_apply(const Matrix2& M, BPoint p);

/// 2*mu*det(s1, s2); the exponent of A in the structure-constant phase.
std::int64_t pairing_exponent(LiftVec s1, LiftVec s2, int twice_mu);

/// All canonical points with F <= bound, sorted.
std::vector<BPoint> points_up_to(std::int64_t bound);
/// All canonical primitive directions with F <= bound, sorted by (F, point).
std::vector<BPoint> primitive_directions(std::int64_t bound);

struct Crossing {
  BPoint ray;
  LiftVec lift;  // the lift of `ray` that positively spans `point`
  RationalPoint point;
  Rational t;
};

struct RayWalk {
  std::vector<Crossing> crossings;  // only those strictly before the origin
  bool hits_origin = false;
};

/// Intersections of the open ray {X + t d : t > 0} with the lines R*p, sorted by t.
RayWalk walk_ray(const RationalPoint& X, LiftVec d, const std::vector<BPoint>& lines);

/// Same as walk_ray but returns nullopt when the ray passes through the origin.
std::optional<std::vector<Crossing>> crossings_on_segment(const RationalPoint& X, LiftVec d,
                                                          const std::vector<BPoint>& lines);

/// Crossing of the ray {lambda*P + t*d : t > 0} for an unspecified
/// lambda > 0; the parameter t = lambda * num / den with den > 0. Positive
/// rescaling of the start point does not change which lines are met, in
/// which order, or on which lift.
struct ScaledHit {
  BPoint ray;
  LiftVec lift;
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct ScaledWalk {
  std::vector<ScaledHit> hits;  // only those strictly before the origin
  bool hits_origin = false;
};

ScaledWalk walk_ray_scaled(LiftVec P, LiftVec d, std::span<const BPoint> lines);

/// Positive rescaling of a nonzero rational point to a primitive integer vector.
LiftVec integral_direction(const RationalPoint& q);

/// v / gcd(|x|, |y|).
LiftVec primitive_part(LiftVec v);

/// Coordinates of p = a*v_j + b*v_{j+1} in the cone with index j (0 for
/// sigma_12, 1 for sigma_23, 2 for sigma_31, with v_4 lifted as (-1,0)).
struct ConeCoords {
  int cone = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend auto operator<=>(const ConeCoords&, const ConeCoords&) = default;
};
ConeCoords cone_decompose(BPoint p);
BPoint cone_compose(const ConeCoords& c);
/// The lift of v_{j} used as a spanning vector of cone j (index 0..3).
LiftVec cone_generator(int index);

/// Angular comparison key helpers on nonzero vectors (counterclockwise from +x).
bool angle_less(LiftVec a, LiftVec b);

}  // namespace skein
