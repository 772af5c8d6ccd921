#include "skein/normal_form.hpp"

#include <stdexcept>

namespace skein {

namespace {

int mod3(int j) { return ((j % 3) + 3) % 3; }

NormalMonomial canon(int j, std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("normal monomial with negative exponent");
  if (a == 0 && b == 0) return {0, 0, 0};
  if (a == 0) return {mod3(j + 1), b, 0};
  return {mod3(j), a, b};
}

bool is_canon(const NormalMonomial& w) {
  return w.cone >= 0 && w.cone < 3 && w == canon(w.cone, w.a, w.b);
}

}  // namespace

NormalMonomial normal_monomial(BPoint p) { return cone_decompose(p); }

BPoint monomial_point(const NormalMonomial& w) { return cone_compose(w); }

std::int64_t monomial_degree(const NormalMonomial& w) { return w.a + w.b; }

std::string monomial_name(const NormalMonomial& w) {
  if (w.a == 0 && w.b == 0) return "1";
  auto factor = [](int j, std::int64_t e) {
    std::string s = "g" + std::to_string(j + 1);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
  };
  std::string s = factor(w.cone, w.a);
  if (w.b > 0) s += " " + factor(mod3(w.cone + 1), w.b);
  return s;
}

NormalElement NormalElement::monomial(Ring ring, const NormalMonomial& w, const CoeffPoly& c) {
  NormalElement e(ring);
  e.add(w, c);
  return e;
}

NormalElement NormalElement::generator(Ring ring, int j) {
  return monomial(ring, canon(j, 1, 0));
}

NormalElement NormalElement::constant(const CoeffPoly& c) {
  return monomial(c.ring(), NormalMonomial{}, c);
}

CoeffPoly NormalElement::coeff(const NormalMonomial& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CoeffPoly(ring_) : it->second;
}

std::int64_t NormalElement::degree() const {
  std::int64_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, monomial_degree(w));
  return d;
}

void NormalElement::add(const NormalMonomial& w, const CoeffPoly& c) {
  if (!is_canon(w)) throw std::invalid_argument("NormalElement: non-canonical monomial");
  if (c.ring() != ring_) throw std::invalid_argument("coefficient ring mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NormalElement& NormalElement::operator+=(const NormalElement& o) {
  if (o.ring_ != ring_) throw std::invalid_argument("coefficient ring mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NormalElement& NormalElement::operator-=(const NormalElement& o) {
  if (o.ring_ != ring_) throw std::invalid_argument("coefficient ring mismatch");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NormalElement NormalElement::scaled(const CoeffPoly& c) const {
  NormalElement out(ring_);
  for (const auto& [w, v] : terms_) out.add(w, v * c);
  return out;
}

std::string NormalElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "[" + c.to_string() + "]*" + monomial_name(w);
  }
  return s;
}

Presentation Presentation::s04() {
  const Ring r = Ring::S04;
  Presentation p;
  p.ring = r;
  p.L = ALaurent::monomial(-4);
  p.M = ALaurent::monomial(2) - ALaurent::monomial(-6);
  const ALaurent c = ALaurent(1) - ALaurent::monomial(-4);
  for (int k = 0; k < 3; ++k) p.C[static_cast<std::size_t>(k)] = CoeffPoly::variable(r, k) * c;

  // A^-2 g1 g2 g3 = A^-4 g1^2 + A^4 g2^2 + A^-4 g3^2 + A^-2 R10 g1 + A^2 R01 g2
  //                 + A^-2 R11 g3 + y - 2(A^4 + A^-4)
  NormalElement rhs(r);
  auto mono = [&](int e) { return CoeffPoly(r, ALaurent::monomial(e)); };
  rhs.add(canon(0, 2, 0), mono(-4));
  rhs.add(canon(1, 2, 0), mono(4));
  rhs.add(canon(2, 2, 0), mono(-4));
  rhs.add(canon(0, 1, 0), CoeffPoly::variable(r, kR10) * ALaurent::monomial(-2));
  rhs.add(canon(1, 1, 0), CoeffPoly::variable(r, kR01) * ALaurent::monomial(2));
  rhs.add(canon(2, 1, 0), CoeffPoly::variable(r, kR11) * ALaurent::monomial(-2));
  rhs.add({}, CoeffPoly::variable(r, kY) - mono(4) * ALaurent(2) - mono(-4) * ALaurent(2));
  p.cubic = rhs.scaled(mono(2));
  return p;
}

Presentation Presentation::s11() {
  const Presentation src = s04();
  Presentation p;
  p.ring = Ring::S11;
  p.L = src.L.rescale_exponents(1, 2);
  p.M = src.M.rescale_exponents(1, 2);
  for (std::size_t k = 0; k < 3; ++k) p.C[k] = specialize_s04_to_s11(src.C[k]);
  p.cubic = NormalElement(Ring::S11);
  for (const auto& [w, c] : src.cubic.terms()) p.cubic.add(w, specialize_s04_to_s11(c));
  return p;
}

Presentation Presentation::with_perturbed_constant(int k, const CoeffPoly& delta) const {
  Presentation p = *this;
  p.C.at(static_cast<std::size_t>(k)) += delta;
  return p;
}

NcAlgebra::NcAlgebra(Presentation pres) : pres_(std::move(pres)) {
  const Ring r = pres_.ring;
  const auto Linv = pres_.L.unit_inverse();
  if (!Linv) throw std::invalid_argument("NcAlgebra: L must be a unit");
  // g_{j+1} g_{j+2} g_j = g_j g_{j+1} g_{j+2}
  //   + L^-1 (M g_{j+2}^2 + C_{j+2} g_{j+2} - M g_{j+1}^2 - C_{j+1} g_{j+1})
  cubics_[0] = pres_.cubic;
  for (int j = 0; j < 2; ++j) {
    const int j1 = mod3(j + 1);
    const int j2 = mod3(j + 2);
    NormalElement next = cubics_[static_cast<std::size_t>(j)];
    const CoeffPoly m(r, pres_.M * *Linv);
    next.add(canon(j2, 2, 0), m);
    next.add(canon(j2, 1, 0), pres_.C[static_cast<std::size_t>(j2)] * *Linv);
    next.add(canon(j1, 2, 0), -m);
    next.add(canon(j1, 1, 0), -(pres_.C[static_cast<std::size_t>(j1)] * *Linv));
    cubics_[static_cast<std::size_t>(j + 1)] = std::move(next);
  }
}

namespace {
constexpr int kMaxDepth = 4096;
}

NormalElement NcAlgebra::reduce(const NormalMonomial& w, int k, int depth) const {
  if (depth > kMaxDepth) throw std::logic_error("NcAlgebra: rewriting does not terminate");
  const Ring r = ring();
  k = mod3(k);
  const auto key = std::make_pair(w, k);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const int j = w.cone;
  const std::int64_t a = w.a;
  const std::int64_t b = w.b;
  const CoeffPoly L(r, pres_.L);
  const CoeffPoly M(r, pres_.M);
  auto C = [&](int i) { return pres_.C[static_cast<std::size_t>(mod3(i))]; };
  auto mono = [&](const NormalMonomial& m) { return NormalElement::monomial(r, m); };

  NormalElement out(r);
  if (a == 0 && b == 0) {
    out = NormalElement::generator(r, k);
  } else if (b == 0) {
    if (k == j) {
      out = mono(canon(j, a + 1, 0));
    } else if (k == mod3(j + 1)) {
      out = mono(canon(j, a, 1));
    } else {
      // g_j g_{j-1} = L g_{j-1} g_j + M g_{j+1} + C_{j+1}
      const NormalMonomial rest = canon(j, a - 1, 0);
      out = times_generator(reduce(rest, j + 2, depth + 1), j, depth + 1).scaled(L);
      out += reduce(rest, j + 1, depth + 1).scaled(M);
      out += mono(rest).scaled(C(j + 1));
    }
  } else if (k == mod3(j + 1)) {
    out = mono(canon(j, a, b + 1));
  } else if (k == j) {
    // g_{j+1} g_j = L g_j g_{j+1} + M g_{j+2} + C_{j+2}
    const NormalMonomial rest = canon(j, a, b - 1);
    out = times_generator(reduce(rest, j, depth + 1), j + 1, depth + 1).scaled(L);
    out += reduce(rest, j + 2, depth + 1).scaled(M);
    out += mono(rest).scaled(C(j + 2));
  } else if (b == 1) {
    out = times_element(mono(canon(j, a - 1, 0)), cubics_[static_cast<std::size_t>(j)], depth + 1);
  } else {
    // g_{j+1} g_{j+2} = L^-1 (g_{j+2} g_{j+1} - M g_j - C_j)
    const CoeffPoly Linv(r, *pres_.L.unit_inverse());
    const NormalMonomial rest = canon(j, a, b - 1);
    out = times_generator(reduce(rest, j + 2, depth + 1), j + 1, depth + 1);
    out -= reduce(rest, j, depth + 1).scaled(M);
    out -= mono(rest).scaled(C(j));
    out = out.scaled(Linv);
  }
  if (out.degree() > monomial_degree(w) + 1)
    throw std::logic_error("NcAlgebra: rewriting raised the filtration degree");
  std::lock_guard lock(mutex_);
  cache_.emplace(key, out);
  return out;
}

NormalElement NcAlgebra::times_generator(const NormalElement& x, int k, int depth) const {
  NormalElement out(ring());
  for (const auto& [w, c] : x.terms()) out += reduce(w, k, depth).scaled(c);
  return out;
}

NormalElement NcAlgebra::times_element(const NormalElement& x, const NormalElement& y,
                                       int depth) const {
  NormalElement out(ring());
  for (const auto& [w, c] : y.terms()) {
    NormalElement acc = x;
    for (std::int64_t i = 0; i < w.a; ++i) acc = times_generator(acc, w.cone, depth);
    for (std::int64_t i = 0; i < w.b; ++i) acc = times_generator(acc, w.cone + 1, depth);
    out += acc.scaled(c);
  }
  return out;
}

NormalElement NcAlgebra::mul_generator(const NormalMonomial& w, int k) const {
  if (!is_canon(w)) throw std::invalid_argument("mul_generator: non-canonical monomial");
  return reduce(w, k, 0);
}

NormalElement NcAlgebra::mul_generator(const NormalElement& x, int k) const {
  if (x.ring() != ring()) throw std::invalid_argument("coefficient ring mismatch");
  return times_generator(x, k, 0);
}

NormalElement NcAlgebra::product(const NormalElement& x, const NormalElement& y) const {
  if (x.ring() != ring() || y.ring() != ring())
    throw std::invalid_argument("coefficient ring mismatch");
  return times_element(x, y, 0);
}

NormalElement nc_product(Preset preset, const NormalElement& x, const NormalElement& y) {
  static const NcAlgebra s04(Presentation::s04());
  static const NcAlgebra s11(Presentation::s11());
  return (preset == Preset::S04 ? s04 : s11).product(x, y);
}

}  // namespace skein
