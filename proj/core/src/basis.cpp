#include "skein/basis.hpp"

#include <stdexcept>

namespace skein {

AlgebraElement MonomialBasis::monomial(const NormalMonomial& w) const {
  {
    std::lock_guard lock(mutex_);
    auto it = monomials_.find(w);
    if (it != monomials_.end()) return it->second;
  }
  AlgebraElement m(ring());
  if (w.a == 0 && w.b == 0) {
    m = AlgebraElement::theta(ring(), BPoint{});
  } else {
    // Peel the last generator off: m[w] = m[w'] * theta_v.
    NormalMonomial rest = w;
    int last = w.cone;
    if (w.b > 0) {
      rest.b -= 1;
      last = (w.cone + 1) % 3;
    } else {
      rest.a -= 1;
    }
    if (rest.a == 0 && rest.b == 0) rest = {};
    const BPoint v = canonicalize(cone_generator(last));
    m = alg_.multiply(monomial(rest), AlgebraElement::theta(ring(), v));
  }
  std::lock_guard lock(mutex_);
  monomials_.emplace(w, m);
  return m;
}

AlgebraElement MonomialBasis::monomials_to_theta(const NormalElement& nf) const {
  if (nf.ring() != ring()) throw std::invalid_argument("coefficient ring mismatch");
  AlgebraElement out(ring());
  for (const auto& [w, c] : nf.terms()) out += monomial(w).scaled(c);
  return out;
}

NormalElement MonomialBasis::theta_to_monomials(BPoint p) const {
  if (!is_canonical(p)) throw std::invalid_argument("theta_to_monomials: non-canonical point");
  {
    std::lock_guard lock(mutex_);
    auto it = thetas_.find(p);
    if (it != thetas_.end()) return it->second;
  }
  const NormalMonomial w = normal_monomial(p);
  NormalElement out = NormalElement::monomial(ring(), w);
  if (!p.is_zero()) {
    AlgebraElement m = monomial(w);
    const CoeffPoly lead = m.coeff(p);
    const auto inv = lead.constant_term().unit_inverse();
    if (lead.terms().size() != 1 || !inv)
      throw std::logic_error("theta_to_monomials: leading coefficient is not a unit");
    m.add(p, -lead);
    for (const auto& [q, c] : m.terms())
      if (f_norm(q) >= f_norm(p))
        throw std::logic_error("theta_to_monomials: monomial is not triangular at " + p.to_string());
    out -= theta_to_monomials(m);
    out = out.scaled(CoeffPoly(ring(), *inv));
  }
  std::lock_guard lock(mutex_);
  thetas_.emplace(p, out);
  return out;
}

NormalElement MonomialBasis::theta_to_monomials(const AlgebraElement& e) const {
  if (e.ring() != ring()) throw std::invalid_argument("coefficient ring mismatch");
  NormalElement out(ring());
  for (const auto& [p, c] : e.terms()) out += theta_to_monomials(p).scaled(c);
  return out;
}

NormalElement theta_to_monomials(const DiagramConfig& cfg, BPoint p) {
  const ThetaAlgebra alg(cfg);
  return MonomialBasis(alg).theta_to_monomials(p);
}

AlgebraElement monomials_to_theta(const DiagramConfig& cfg, const NormalElement& nf) {
  const ThetaAlgebra alg(cfg);
  return MonomialBasis(alg).monomials_to_theta(nf);
}

}  // namespace skein
