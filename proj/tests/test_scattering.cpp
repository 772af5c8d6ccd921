#include "skein/scattering.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace skein;

namespace {

ALaurent A(int e) { return ALaurent::monomial(e); }

CoeffPoly var(int i) { return CoeffPoly::variable(Ring::S04, i); }

std::set<BPoint> brute_relevant(std::int64_t budget) {
  std::set<BPoint> out;
  for (std::int64_t m = -budget; m <= budget; ++m)
    for (std::int64_t n = 0; n <= budget; ++n) {
      if (n == 0 && m <= 0) continue;
      if (std::gcd(m, n) != 1) continue;
      const std::int64_t F = std::max({std::abs(m), std::abs(n), std::abs(m + n)});
      if (F <= budget) out.insert({m, n});
    }
  return out;
}

// Q lies in the sector touching the ray through t iff no line direction lies
// strictly between them. When t is itself on a line, the side picks the sector.
bool sector_oracle(const RationalPoint& Q, LiftVec t, const std::vector<BPoint>& rays, Side side) {
  auto det_q = [&](LiftVec v) { return Rational(v.x) * Q.y - Rational(v.y) * Q.x; };
  std::vector<LiftVec> dirs{{1, 0}, {0, 1}, {-1, 1}};
  for (const auto& r : rays) dirs.push_back(r.lift());
  bool t_on_line = false;
  for (LiftVec v : dirs) t_on_line = t_on_line || det(v, t) == 0;
  const Rational tq = det_q(t);
  if (tq == 0) return !t_on_line && Rational(t.x) * Q.x + Rational(t.y) * Q.y > 0;
  const int orient = tq > 0 ? 1 : -1;
  if (t_on_line && orient != (side == Side::Left ? 1 : -1)) return false;
  for (LiftVec v : dirs)
    for (LiftVec w : {v, -v}) {
      if (det_q(w) == 0) return false;
      if (det(t, w) * orient > 0 && det_q(w) * orient > 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("ray_series examples") {
  const auto s04 = DiagramConfig::s04();
  CHECK(ray_series(s04, {1, 0}, 2).coeffs() == std::vector<CoeffPoly>{CoeffPoly(Ring::S04, 1), var(kR10), var(kY)});
  CHECK(ray_series(s04, {1, 1}, 1).coeffs() == std::vector<CoeffPoly>{CoeffPoly(Ring::S04, 1), var(kR11)});
  const CoeffPoly z = CoeffPoly::variable(Ring::S11, 0);
  const CoeffPoly zero(Ring::S11);
  CHECK(ray_series(DiagramConfig::s11(), {0, 1}, 3).coeffs() ==
        std::vector<CoeffPoly>{CoeffPoly(Ring::S11, 1), zero, z, zero});
  CHECK_THROWS_AS(ray_series(s04, {2, 0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(ray_series(s04, {0, 0}, 3), std::invalid_argument);
}

TEST_CASE("S04 wall depends only on the direction mod 2, up to the cyclic permutation") {
  const auto s04 = DiagramConfig::s04();
  const auto base = ray_series(s04, {1, 0}, 10);
  // (1,0) -> (0,1) -> (1,1) mod 2 sends R10 -> R01 -> R11 -> R10.
  const std::array<int, kMaxVars> cyc{1, 2, 0, 3};
  auto permuted = [&](const RaySeries& s, int times) {
    std::vector<CoeffPoly> cs = s.coeffs();
    for (auto& c : cs)
      for (int i = 0; i < times; ++i) c = c.permute_variables(cyc);
    return cs;
  };
  for (const auto& d : primitive_directions(7)) {
    const auto s = ray_series(s04, d, 10);
    const int cls = (d.m % 2 != 0 && d.n % 2 == 0) ? 0 : (d.m % 2 == 0 ? 1 : 2);
    CHECK(s.coeffs() == permuted(base, cls));
    CHECK(s.nonnegative());
  }
}

TEST_CASE("S11 wall is independent of the direction") {
  const auto s11 = DiagramConfig::s11();
  const auto base = ray_series(s11, {1, 0}, 12);
  CHECK(base == wall_G(CoeffPoly::variable(Ring::S11, 0), 12));
  for (const auto& d : primitive_directions(6)) CHECK(ray_series(s11, d, 12) == base);
}

TEST_CASE("specializing the S04 walls gives the S11 walls") {
  for (const auto& d : primitive_directions(4)) {
    const auto s04 = ray_series(DiagramConfig::s04(), d, 12);
    const auto s11 = ray_series(DiagramConfig::s11(), d, 12);
    for (unsigned k = 0; k <= 12; ++k) CHECK(specialize_s04_to_s11(s04.coeff(k)) == s11.coeff(k));
  }
}

TEST_CASE("product-form and closed-form walls agree through x^3 and split at x^4") {
  const CoeffPoly r = var(kR10), b = var(kR01), c = var(kR11), y = var(kY);
  const auto prod = wall_product_form(r, b, c, y, 8);
  const auto closed = wall_closed_form(r, b * c, y, 8);
  for (unsigned k = 0; k <= 3; ++k) CHECK(prod.coeff(k) == closed.coeff(k));
  CHECK(prod.coeff(4) != closed.coeff(4));
  CHECK(closed.coeff(4) == (b * c).pow(2) + y * (A(4) + A(-4)));
  CHECK(DiagramConfig::s04().wall == WallForm::Product);
  CHECK(ray_series(DiagramConfig::s04(WallForm::ClosedForm), {1, 0}, 8) == closed);
}

TEST_CASE("relevant_rays") {
  CHECK(relevant_rays({1, 0}, {0, 1}, {1, 1}).empty());
  CHECK(relevant_rays({1, 0}, {1, 0}, {2, 0}).empty());
  const auto r = relevant_rays({1, 0}, {0, 1}, {0, 0});
  CHECK(std::set<BPoint>(r.begin(), r.end()) ==
        std::set<BPoint>{{1, 0}, {0, 1}, {-1, 1}, {1, 1}, {-1, 2}, {-2, 1}});
  for (std::int64_t b = 0; b <= 7; ++b) {
    const auto got = primitive_directions(b);
    CHECK(std::set<BPoint>(got.begin(), got.end()) == brute_relevant(b));
  }
  for (const auto& p1 : points_up_to(3))
    for (const auto& p2 : points_up_to(3))
      for (const auto& p : points_up_to(6)) {
        const auto got = relevant_rays(p1, p2, p);
        const std::int64_t budget = f_norm(p1) + f_norm(p2) - f_norm(p);
        CHECK(std::set<BPoint>(got.begin(), got.end()) == (budget < 0 ? std::set<BPoint>{} : brute_relevant(budget)));
      }
}

TEST_CASE("basepoints avoid every line and touch the target ray") {
  const auto rays = primitive_directions(4);
  for (const auto& p : points_up_to(5))
    for (Side side : {Side::Left, Side::Right})
      for (const auto& lines : {std::vector<BPoint>{}, rays}) {
        const LiftVec t = p.is_zero() ? kDefaultDirection : p.lift();
        const auto Qs = basepoint_candidates(t, lines, side);
        CHECK(Qs.size() == 3);
        CHECK(std::set<std::string>{Qs[0].to_string(), Qs[1].to_string(), Qs[2].to_string()}.size() == 3);
        for (const auto& Q : Qs) {
          CHECK(is_generic(Q, lines));
          CHECK(sector_oracle(Q, t, lines, side));
          CHECK(is_admissible(Q, t, lines));
        }
        const auto Q = choose_basepoint(t, lines, side);
        CHECK(sector_oracle(Q, t, lines, side));
      }
}

TEST_CASE("surface names") {
  CHECK(parse_surface("s04") == Surface::S04);
  CHECK(parse_surface("s11") == Surface::S11);
  CHECK(surface_name(Surface::S11) == "s11");
  CHECK_THROWS_AS(parse_surface("s22"), std::invalid_argument);
  const auto s04 = DiagramConfig::s04();
  CHECK(s04.twice_mu == 2);
  CHECK(s04.ring == Ring::S04);
  const auto s11 = DiagramConfig::s11();
  CHECK(s11.twice_mu == 1);
  CHECK(s11.ring == Ring::S11);
}

TEST_CASE("perturbation hook") {
  auto cfg = DiagramConfig::s04();
  cfg.perturbation = [](BPoint d, const RaySeries& s) {
    return d == BPoint{1, 1} ? s.perturbed(1, CoeffPoly(Ring::S04, 1)) : s;
  };
  const ScatteringDiagram D(cfg);
  CHECK(D.series({1, 1}, 3)->coeff(1) == var(kR11) + CoeffPoly(Ring::S04, 1));
  CHECK(D.series({-1, 1}, 3)->coeff(1) == var(kR11));
}
