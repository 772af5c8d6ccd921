#include "skein/broken_lines.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <thread>

namespace skein {

CoeffPoly bend_factor(const RaySeries& series, unsigned N, unsigned ell, int twice_mu) {
  const Ring ring = series.ring();
  if (N == 0) return ell == 0 ? CoeffPoly(ring, 1) : CoeffPoly(ring);
  if (ell > series.order())
    throw std::invalid_argument("bend_factor: bend amount exceeds the series order");
  std::vector<CoeffPoly> acc(ell + 1, CoeffPoly(ring));
  acc[0] = CoeffPoly(ring, 1);
  for (unsigned j = 0; j < N; ++j) {
    const int shift = twice_mu * (2 * static_cast<int>(j) - static_cast<int>(N) + 1);
    std::vector<CoeffPoly> next(ell + 1, CoeffPoly(ring));
    for (unsigned k = 0; k <= ell; ++k) {
      const CoeffPoly& ck = series.coeff(k);
      if (ck.is_zero()) continue;
      const CoeffPoly term = ck * ALaurent::monomial(shift * static_cast<int>(k));
      for (unsigned i = 0; i + k <= ell; ++i)
        if (!acc[i].is_zero()) next[i + k] += acc[i] * term;
    }
    acc = std::move(next);
  }
  return acc[ell];
}

bool trace_is_consistent(const BrokenLineTrace& t) {
  LiftVec p = t.initial_exponent;
  if (canonicalize(p) != t.charge) return false;
  CoeffPoly c(t.coefficient.ring(), 1);
  for (const auto& e : t.events) {
    p = p - static_cast<std::int64_t>(e.ell) * e.lift;
    c *= e.factor;
    // The bend point lies on the wall's line, on the side spanned by the lift.
    if (e.point.x * e.lift.y - e.point.y * e.lift.x != 0) return false;
    if (e.point.x * e.lift.x + e.point.y * e.lift.y <= 0) return false;
  }
  return p == t.final_exponent && c == t.coefficient;
}

LiftVec lift_towards(BPoint p, const RationalPoint& Q) {
  if (p.is_zero()) return {};
  const Rational d = Q.x * p.m + Q.y * p.n;
  if (d == 0) throw std::invalid_argument("lift_towards: endpoint orthogonal to " + p.to_string());
  return d > 0 ? p.lift() : -p.lift();
}

ThetaAlgebra::ThetaAlgebra(DiagramConfig cfg) : diagram_(std::move(cfg)) {}

unsigned ThetaAlgebra::threads() const {
  unsigned n = threads_;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SKEIN_SCATTER_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
  }
  return n;
}

std::shared_ptr<const std::vector<BPoint>> ThetaAlgebra::lines_up_to(std::int64_t bound) const {
  std::lock_guard lock(mutex_);
  if (bound > lines_bound_) {
    lines_ = std::make_shared<const std::vector<BPoint>>(primitive_directions(bound));
    lines_bound_ = bound;
  }
  return lines_;
}

CoeffPoly ThetaAlgebra::bend(BPoint dir, unsigned N, unsigned ell) const {
  const int cls = diagram_.wall_class(dir);
  static constexpr std::array<BPoint, 3> reps{BPoint{1, 0}, BPoint{0, 1}, BPoint{1, 1}};
  const BPoint key_dir = cls < 0 ? dir : reps[static_cast<std::size_t>(cls)];
  const auto key = std::make_tuple(key_dir, N, ell);
  {
    std::lock_guard lock(mutex_);
    auto it = bend_cache_.find(key);
    if (it != bend_cache_.end()) return it->second;
  }
  const auto series = diagram_.series(dir, std::max(ell, 1u));
  CoeffPoly f = bend_factor(*series, N, ell, config().twice_mu);
  std::lock_guard lock(mutex_);
  bend_cache_.emplace(key, f);
  return f;
}

namespace {

std::span<const BPoint> prefix_by_norm(const std::vector<BPoint>& lines, std::int64_t bound) {
  auto end = std::upper_bound(lines.begin(), lines.end(), bound,
                              [](std::int64_t b, BPoint p) { return b < f_norm(p); });
  return {lines.data(), static_cast<std::size_t>(end - lines.begin())};
}

}  // namespace

std::vector<BPoint> ThetaAlgebra::relevant(std::int64_t budget) const {
  if (budget <= 0) return {};
  const auto lines = lines_up_to(budget);
  const auto span = prefix_by_norm(*lines, budget);
  return {span.begin(), span.end()};
}

// The walk from lambda*P in direction p does not depend on lambda > 0, so
// partial sums are shared between all endpoints that reach the same wall.
CoeffPoly ThetaAlgebra::walk(BPoint charge, LiftVec P, LiftVec p, std::int64_t remaining,
                             const std::vector<BPoint>& all_lines) const {
  P = primitive_part(P);
  const WalkKey key{charge, P, p, remaining};
  {
    std::lock_guard lock(mutex_);
    auto it = walk_cache_.find(key);
    if (it != walk_cache_.end()) return it->second;
  }
  const ScaledWalk w = walk_ray_scaled(P, p, prefix_by_norm(all_lines, remaining));
  CoeffPoly total(ring());
  if (!w.hits_origin && canonicalize(p) == charge) total += CoeffPoly(ring(), 1);
  for (const ScaledHit& h : w.hits) {
    const std::int64_t fw = f_norm(h.lift);
    const auto N = static_cast<unsigned>(std::llabs(det(h.lift, p)));
    if (N == 0) continue;
    for (std::int64_t ell = 1; ell * fw <= remaining; ++ell) {
      const CoeffPoly f = bend(h.ray, N, static_cast<unsigned>(ell));
      if (f.is_zero()) continue;
      const CoeffPoly rest = walk(charge, h.lift, p + ell * h.lift, remaining - ell * fw, all_lines);
      if (!rest.is_zero()) total += f * rest;
    }
  }
  std::lock_guard lock(mutex_);
  walk_cache_.emplace(key, total);
  return total;
}

CoeffPoly ThetaAlgebra::final_coefficient(BPoint charge, const RationalPoint& Q, LiftVec s) const {
  if (s.is_zero() || charge.is_zero()) return CoeffPoly(ring());
  const std::int64_t remaining = f_norm(charge) - f_differential(Q)(s);
  if (remaining < 0) return CoeffPoly(ring());
  const auto lines = lines_up_to(remaining);
  return walk(charge, integral_direction(Q), s, remaining, *lines);
}

void ThetaAlgebra::walk_traces(BPoint charge, const RationalPoint& X, LiftVec p,
                               std::int64_t remaining, const CoeffPoly& coeff,
                               const std::vector<BPoint>& all_lines, std::vector<BendEvent>& events,
                               BrokenLineTrace& proto, std::vector<BrokenLineTrace>& out) const {
  const auto lines = prefix_by_norm(all_lines, remaining);
  const RayWalk w = walk_ray(X, p, {lines.begin(), lines.end()});
  if (!w.hits_origin && canonicalize(p) == charge) {
    BrokenLineTrace t = proto;
    t.initial_exponent = p;
    t.events.assign(events.rbegin(), events.rend());
    t.coefficient = coeff;
    out.push_back(std::move(t));
  }
  for (const Crossing& c : w.crossings) {
    const std::int64_t fw = f_norm(c.lift);
    const auto N = static_cast<unsigned>(std::llabs(det(c.lift, p)));
    if (N == 0) continue;
    for (std::int64_t ell = 1; ell * fw <= remaining; ++ell) {
      const CoeffPoly f = bend(c.ray, N, static_cast<unsigned>(ell));
      if (f.is_zero()) continue;
      events.push_back({c.point, c.ray, c.lift, static_cast<unsigned>(ell), N, f});
      walk_traces(charge, c.point, p + ell * c.lift, remaining - ell * fw, coeff * f, all_lines,
                  events, proto, out);
      events.pop_back();
    }
  }
}

std::vector<BrokenLineTrace> ThetaAlgebra::enumerate(BPoint charge, const RationalPoint& Q,
                                                     std::int64_t budget) const {
  if (!is_canonical(charge)) throw std::invalid_argument("enumerate: non-canonical charge");
  if (budget < 0) throw std::invalid_argument("enumerate: negative budget");
  const auto lines = lines_up_to(budget);
  for (const auto& d : *lines)
    if (f_norm(d) <= budget && Q.x * d.n - Q.y * d.m == 0)
      throw std::invalid_argument("enumerate: endpoint lies on the ray " + d.to_string());
  std::vector<BrokenLineTrace> out;
  if (charge.is_zero()) return out;
  const LinearForm dF = f_differential(Q);
  const std::int64_t K = f_norm(charge) + budget;
  for (std::int64_t x = -K; x <= K; ++x)
    for (std::int64_t y = -K; y <= K; ++y) {
      const LiftVec s{x, y};
      if (s.is_zero() || f_norm(s) > K) continue;
      const std::int64_t slack = f_norm(charge) - dF(s);
      if (slack < 0) continue;
      BrokenLineTrace proto;
      proto.charge = charge;
      proto.endpoint = Q;
      proto.final_exponent = s;
      std::vector<BendEvent> events;
      walk_traces(charge, Q, s, std::min(slack, budget), CoeffPoly(ring(), 1), *lines, events,
                  proto, out);
    }
  return out;
}

CoeffPoly ThetaAlgebra::structure_constant(BPoint p1, BPoint p2, BPoint p,
                                           const RationalPoint& Q) const {
  for (BPoint q : {p1, p2, p})
    if (!is_canonical(q)) throw std::invalid_argument("structure_constant: non-canonical point");
  if (p1.is_zero()) return CoeffPoly(ring(), p == p2 ? 1 : 0);
  if (p2.is_zero()) return CoeffPoly(ring(), p == p1 ? 1 : 0);
  const std::int64_t b = f_norm(p1) + f_norm(p2) - f_norm(p);
  if (b < 0) return CoeffPoly(ring());
  const auto rays = relevant(b);
  const LiftVec target = p.is_zero() ? kDefaultDirection : lift_towards(p, Q);
  const bool ok = p.is_zero() ? is_generic(Q, rays) : is_admissible(Q, target, rays);
  if (!ok)
    throw std::invalid_argument("structure_constant: endpoint " + Q.to_string() +
                                " is not admissible for " + p.to_string());
  const LiftVec pt = p.is_zero() ? LiftVec{} : target;
  const LinearForm dF = f_differential(Q);
  const std::int64_t K = f_norm(p1) + b;
  CoeffPoly total(ring());
  for (std::int64_t x = -K; x <= K; ++x)
    for (std::int64_t y = -K; y <= K; ++y) {
      const LiftVec s1{x, y};
      if (s1.is_zero() || f_norm(s1) > K) continue;
      const LiftVec s2 = pt - s1;
      if (s2.is_zero()) continue;
      if (f_norm(p1) - dF(s1) < 0 || f_norm(p2) - dF(s2) < 0) continue;
      const CoeffPoly c1 = final_coefficient(p1, Q, s1);
      if (c1.is_zero()) continue;
      const CoeffPoly c2 = final_coefficient(p2, Q, s2);
      if (c2.is_zero()) continue;
      const auto phase = pairing_exponent(s1, s2, config().twice_mu);
      total += c1 * c2 * ALaurent::monomial(static_cast<int>(phase));
    }
  return total;
}

RationalPoint ThetaAlgebra::endpoint(BPoint p1, BPoint p2, BPoint p, Side side) const {
  const std::int64_t b = f_norm(p1) + f_norm(p2) - f_norm(p);
  if (b < 0 || p1.is_zero() || p2.is_zero()) return RationalPoint(kDefaultDirection);
  const SideKey key{b, p, side};
  {
    std::lock_guard lock(mutex_);
    auto it = basepoint_cache_.find(key);
    if (it != basepoint_cache_.end()) return it->second;
  }
  RationalPoint Q = choose_basepoint(p.lift(), relevant(b), side);
  std::lock_guard lock(mutex_);
  basepoint_cache_.emplace(key, Q);
  return Q;
}

CoeffPoly ThetaAlgebra::structure_constant(BPoint p1, BPoint p2, BPoint p, Side side) const {
  return structure_constant(p1, p2, p, endpoint(p1, p2, p, side));
}

AlgebraElement ThetaAlgebra::product(BPoint p1, BPoint p2) const {
  if (!is_canonical(p1) || !is_canonical(p2))
    throw std::invalid_argument("product: non-canonical point");
  {
    std::lock_guard lock(mutex_);
    auto it = product_cache_.find({p1, p2});
    if (it != product_cache_.end()) return it->second;
  }
  AlgebraElement result(ring());
  if (p1.is_zero() || p2.is_zero()) {
    result.add(p1.is_zero() ? p2 : p1, CoeffPoly(ring(), 1));
  } else {
    const auto targets = points_up_to(f_norm(p1) + f_norm(p2));
    std::vector<CoeffPoly> values(targets.size(), CoeffPoly(ring()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < targets.size(); i = next++)
        values[i] = structure_constant(p1, p2, targets[i], Side::Left);
    };
    const unsigned n = std::min<unsigned>(threads(), static_cast<unsigned>(targets.size()));
    if (n <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < targets.size(); ++i) result.add(targets[i], values[i]);
  }
  std::lock_guard lock(mutex_);
  product_cache_.emplace(std::make_pair(p1, p2), result);
  return result;
}

AlgebraElement ThetaAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  if (a.ring() != ring() || b.ring() != ring())
    throw std::invalid_argument("multiply: coefficient ring mismatch");
  AlgebraElement out(ring());
  for (const auto& [p1, c1] : a.terms())
    for (const auto& [p2, c2] : b.terms()) out += product(p1, p2).scaled(c1 * c2);
  return out;
}

std::vector<BrokenLineTrace> enumerate_broken_lines(const DiagramConfig& cfg, BPoint charge,
                                                    const RationalPoint& Q, std::int64_t budget) {
  return ThetaAlgebra(cfg).enumerate(charge, Q, budget);
}

CoeffPoly structure_constant(const DiagramConfig& cfg, BPoint p1, BPoint p2, BPoint p,
                             const RationalPoint& Q) {
  return ThetaAlgebra(cfg).structure_constant(p1, p2, p, Q);
}

AlgebraElement product_theta(const DiagramConfig& cfg, BPoint p1, BPoint p2) {
  return ThetaAlgebra(cfg).product(p1, p2);
}

AlgebraElement element_product(const DiagramConfig& cfg, const AlgebraElement& a, const AlgebraElement& b) {
  return ThetaAlgebra(cfg).multiply(a, b);
}

}  // namespace skein
