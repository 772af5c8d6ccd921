#include "skein/series.hpp"

#include <stdexcept>

namespace skein {

namespace {

CoeffPoly constant(Ring ring, const ALaurent& c) { return CoeffPoly(ring, c); }

XPoly one_minus(Ring ring, const ALaurent& c, unsigned degree) {
  XPoly f(degree + 1, CoeffPoly(ring));
  f[0] = constant(ring, 1);
  f[degree] = constant(ring, -c);
  return f;
}

void add_at(XPoly& p, std::size_t k, const CoeffPoly& c) {
  if (p.size() <= k) p.resize(k + 1, CoeffPoly(c.ring()));
  p[k] += c;
}

XPoly mul_trunc(const XPoly& a, const XPoly& b, unsigned order) {
  const Ring ring = a.empty() ? b.front().ring() : a.front().ring();
  XPoly out(order + 1, CoeffPoly(ring));
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Power-series inverse of f (constant term 1) via g_n = -sum_{k>=1} f_k g_{n-k}.
XPoly inverse(const XPoly& f, unsigned order) {
  const Ring ring = f.front().ring();
  XPoly g(order + 1, CoeffPoly(ring));
  g[0] = constant(ring, 1);
  for (unsigned n = 1; n <= order; ++n) {
    CoeffPoly acc(ring);
    for (unsigned k = 1; k <= n && k < f.size(); ++k)
      if (!f[k].is_zero() && !g[n - k].is_zero()) acc -= f[k] * g[n - k];
    g[n] = std::move(acc);
  }
  return g;
}

bool is_one(const CoeffPoly& c) { return c == CoeffPoly(c.ring(), 1); }

}  // namespace

RaySeries::RaySeries(Ring ring, std::vector<CoeffPoly> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)), zero_(ring) {
  if (coeffs_.empty() || !is_one(coeffs_.front()))
    throw std::invalid_argument("RaySeries: constant term must be 1");
  for (const auto& c : coeffs_)
    if (c.ring() != ring) throw std::invalid_argument("RaySeries: coefficient ring mismatch");
}

const CoeffPoly& RaySeries::coeff(unsigned k) const {
  return k < coeffs_.size() ? coeffs_[k] : zero_;
}

bool RaySeries::nonnegative() const {
  for (const auto& c : coeffs_)
    if (!c.nonnegative()) return false;
  return true;
}

RaySeries RaySeries::truncated(unsigned order) const {
  if (order > this->order()) throw std::invalid_argument("RaySeries::truncated: order too large");
  return RaySeries(ring_, std::vector<CoeffPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

RaySeries RaySeries::perturbed(unsigned k, const CoeffPoly& delta) const {
  if (k == 0) throw std::invalid_argument("RaySeries::perturbed: c_0 is fixed");
  auto c = coeffs_;
  if (k < c.size()) c[k] += delta;
  return RaySeries(ring_, std::move(c));
}

RaySeries expand_rational_series(Ring ring, const XPoly& numerator,
                                 const std::vector<std::pair<XPoly, unsigned>>& denom_factors,
                                 unsigned order) {
  if (numerator.empty() || !is_one(numerator.front()))
    throw std::invalid_argument("expand_rational_series: numerator constant term must be 1");
  XPoly acc = numerator;
  acc.resize(order + 1, CoeffPoly(ring));
  for (const auto& [factor, mult] : denom_factors) {
    if (factor.empty() || !is_one(factor.front()))
      throw std::invalid_argument("expand_rational_series: denominator factor not invertible");
    const XPoly inv = inverse(factor, order);
    for (unsigned m = 0; m < mult; ++m) acc = mul_trunc(acc, inv, order);
  }
  return RaySeries(ring, std::move(acc));
}

std::vector<std::pair<XPoly, unsigned>> sphere_denominator(Ring ring) {
  return {{one_minus(ring, ALaurent::monomial(-4), 2), 1},
          {one_minus(ring, 1, 2), 2},
          {one_minus(ring, ALaurent::monomial(4), 2), 1}};
}

RaySeries wall_closed_form(const CoeffPoly& r, const CoeffPoly& s, const CoeffPoly& y,
                           unsigned order) {
  const Ring ring = r.ring();
  // Everything over D2 = (1 - A^-4 x^2)(1 - x^2)^2 (1 - A^4 x^2).
  XPoly num(9, CoeffPoly(ring));
  const ALaurent c = ALaurent::monomial(4) + ALaurent::monomial(-4);
  add_at(num, 0, constant(ring, 1));
  add_at(num, 2, constant(ring, -(c + 2)));
  add_at(num, 4, constant(ring, c + c + 2));
  add_at(num, 6, constant(ring, -(c + 2)));
  add_at(num, 8, constant(ring, 1));
  // r x (1 + x^2)(1 - x^2)^2 = r (x - x^3 - x^5 + x^7)
  add_at(num, 1, r);
  add_at(num, 3, -r);
  add_at(num, 5, -r);
  add_at(num, 7, r);
  // y x^2 (1 - x^2)^2
  add_at(num, 2, y);
  add_at(num, 4, y * ALaurent(-2));
  add_at(num, 6, y);
  // s x^3 (1 + s x + x^2)
  add_at(num, 3, s);
  add_at(num, 4, s * s);
  add_at(num, 5, s);
  return expand_rational_series(ring, num, sphere_denominator(ring), order);
}

RaySeries wall_product_form(const CoeffPoly& r, const CoeffPoly& b, const CoeffPoly& c,
                            const CoeffPoly& y, unsigned order) {
  const Ring ring = r.ring();
  const ALaurent k = ALaurent::monomial(4) + 2 + ALaurent::monomial(-4);
  XPoly num(9, CoeffPoly(ring));
  add_at(num, 0, constant(ring, 1));
  add_at(num, 8, constant(ring, 1));
  for (std::size_t e : {1u, 7u}) add_at(num, e, r);
  for (std::size_t e : {2u, 6u}) add_at(num, e, y - constant(ring, k));
  for (std::size_t e : {3u, 5u}) add_at(num, e, b * c - r);
  add_at(num, 4, b * b + c * c - y * ALaurent(2) + constant(ring, k + k - 2));
  return expand_rational_series(ring, num, sphere_denominator(ring), order);
}

RaySeries wall_G(const CoeffPoly& z, unsigned order) {
  const Ring ring = z.ring();
  const XPoly d1 = one_minus(ring, ALaurent::monomial(-2), 2);
  const XPoly d2 = one_minus(ring, ALaurent::monomial(2), 2);
  XPoly num = mul_trunc(d1, d2, 4);
  num[2] += z;
  return expand_rational_series(ring, num, {{d1, 1}, {d2, 1}}, order);
}

}  // namespace skein
