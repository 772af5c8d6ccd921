#include "skein/scattering.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

std::string_view surface_name(Surface s) { return s == Surface::S04 ? "s04" : "s11"; }

Surface parse_surface(std::string_view name) {
  if (name == "s04") return Surface::S04;
  if (name == "s11") return Surface::S11;
  throw std::invalid_argument("unknown surface '" + std::string(name) + "'");
}

DiagramConfig DiagramConfig::s04(WallForm wall) {
  DiagramConfig c;
  c.wall = wall;
  return c;
}

DiagramConfig DiagramConfig::s11() {
  DiagramConfig c;
  c.surface = Surface::S11;
  c.twice_mu = 1;
  c.ring = Ring::S11;
  return c;
}

DiagramConfig DiagramConfig::for_surface(Surface s) { return s == Surface::S04 ? s04() : s11(); }

namespace {

// 0 for (1,0) mod 2, 1 for (0,1) mod 2, 2 for (1,1) mod 2.
int parity_class(BPoint d) {
  const bool mo = (d.m % 2) != 0;
  const bool no = (d.n % 2) != 0;
  if (mo && !no) return 0;
  if (!mo && no) return 1;
  return 2;
}

}  // namespace

RaySeries ray_series(const DiagramConfig& cfg, BPoint dir, unsigned order) {
  if (dir.is_zero() || !is_primitive(dir.lift()))
    throw std::invalid_argument("ray_series: direction " + dir.to_string() + " is not primitive");
  if (cfg.surface == Surface::S11) return wall_G(CoeffPoly::variable(Ring::S11, 0), order);
  const int own = parity_class(dir);
  std::array<int, 3> vars{kR10, kR01, kR11};
  const CoeffPoly r = CoeffPoly::variable(Ring::S04, vars[own]);
  const CoeffPoly b = CoeffPoly::variable(Ring::S04, vars[(own + 1) % 3]);
  const CoeffPoly c = CoeffPoly::variable(Ring::S04, vars[(own + 2) % 3]);
  const CoeffPoly y = CoeffPoly::variable(Ring::S04, kY);
  if (cfg.wall == WallForm::ClosedForm) return wall_closed_form(r, b * c, y, order);
  return wall_product_form(r, b, c, y, order);
}

std::vector<BPoint> relevant_rays(const BPoint& p1, const BPoint& p2, const BPoint& p) {
  const std::int64_t budget = f_norm(p1) + f_norm(p2) - f_norm(p);
  if (budget <= 0) return {};
  return primitive_directions(budget);
}

namespace {

std::vector<LiftVec> arrangement(const std::vector<BPoint>& lines) {
  std::vector<LiftVec> rays;
  auto add = [&](LiftVec v) {
    rays.push_back(v);
    rays.push_back(-v);
  };
  add({1, 0});
  add({0, 1});
  add({-1, 1});
  for (const auto& p : lines) add(p.lift());
  std::sort(rays.begin(), rays.end(), angle_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

bool strictly_between(LiftVec lo, LiftVec v, LiftVec hi) {
  // Counterclockwise from lo to hi with opening angle below pi.
  return det(lo, v) > 0 && det(v, hi) > 0;
}

}  // namespace

std::vector<RationalPoint> basepoint_candidates(LiftVec target, const std::vector<BPoint>& lines,
                                                Side side) {
  if (target.is_zero()) target = kDefaultDirection;
  const auto rays = arrangement(lines);
  const std::size_t n = rays.size();
  std::size_t lo = n;
  for (std::size_t i = 0; i < n; ++i) {
    const LiftVec a = rays[i];
    const LiftVec b = rays[(i + 1) % n];
    if (det(a, target) == 0 && dot(a, target) > 0) {
      lo = side == Side::Left ? i : (i + n - 1) % n;
      break;
    }
    if (strictly_between(a, target, b)) {
      lo = i;
      break;
    }
  }
  if (lo == n) throw std::logic_error("basepoint_candidates: target not located");
  const LiftVec a = rays[lo];
  const LiftVec b = rays[(lo + 1) % n];
  return {RationalPoint(a + b), RationalPoint(2 * a + b), RationalPoint(a + 2 * b)};
}

RationalPoint choose_basepoint(LiftVec target, const std::vector<BPoint>& lines, Side side) {
  return basepoint_candidates(target, lines, side).front();
}

bool is_generic(const RationalPoint& Q, const std::vector<BPoint>& lines) {
  if (Q.x == 0 && Q.y == 0) return false;
  for (const auto& r : arrangement(lines))
    if (Q.x * r.y - Q.y * r.x == 0) return false;
  return true;
}

bool is_admissible(const RationalPoint& Q, LiftVec target, const std::vector<BPoint>& lines) {
  if (target.is_zero()) target = kDefaultDirection;
  if (!is_generic(Q, lines)) return false;
  const auto rays = arrangement(lines);
  // Q and target must not be separated: no ray strictly inside the cone they
  // span, and they must not be opposite.
  const Rational c = Q.y * target.x - Q.x * target.y;  // det(target, Q)
  if (c == 0) return Q.x * target.x + Q.y * target.y > 0;
  for (const auto& r : rays) {
    const Rational d1 = c > 0 ? Rational(det(target, r)) : Rational(det(r, target));
    const Rational d2 = c > 0 ? Rational(r.x * Q.y - r.y * Q.x) : Rational(Q.x * r.y - Q.y * r.x);
    if (d1 > 0 && d2 > 0) return false;
  }
  return true;
}

ScatteringDiagram::ScatteringDiagram(DiagramConfig cfg) : cfg_(std::move(cfg)) {}

int ScatteringDiagram::wall_class(BPoint dir) const {
  if (cfg_.perturbation) return -1;
  return cfg_.surface == Surface::S11 ? 0 : parity_class(dir);
}

std::shared_ptr<const RaySeries> ScatteringDiagram::series(BPoint dir, unsigned order) const {
  // Non-perturbed diagrams share series by parity class, keyed by a
  // representative direction.
  BPoint key = dir;
  if (!cfg_.perturbation) {
    static constexpr std::array<BPoint, 3> reps{BPoint{1, 0}, BPoint{0, 1}, BPoint{1, 1}};
    key = reps[static_cast<std::size_t>(wall_class(dir))];
  }
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.lower_bound({key, order});
    if (it != cache_.end() && it->first.first == key) return it->second;
  }
  RaySeries s = ray_series(cfg_, dir, order);
  if (cfg_.perturbation) s = cfg_.perturbation(dir, s);
  auto ptr = std::make_shared<const RaySeries>(std::move(s));
  std::lock_guard lock(mutex_);
  cache_[{key, order}] = ptr;
  return ptr;
}

}  // namespace skein
