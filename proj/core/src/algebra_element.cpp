#include "skein/algebra_element.hpp"

#include <stdexcept>

namespace skein {

AlgebraElement AlgebraElement::theta(Ring ring, BPoint p, const CoeffPoly& c) {
  AlgebraElement e(ring);
  e.add(p, c);
  return e;
}

CoeffPoly AlgebraElement::coeff(BPoint p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? CoeffPoly(ring_) : it->second;
}

void AlgebraElement::add(BPoint p, const CoeffPoly& c) {
  if (!is_canonical(p)) throw std::invalid_argument("AlgebraElement: non-canonical key " + p.to_string());
  if (c.ring() != ring_) throw std::invalid_argument("AlgebraElement: coefficient ring mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.ring_ != ring_) throw std::invalid_argument("AlgebraElement: ring mismatch");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.ring_ != ring_) throw std::invalid_argument("AlgebraElement: ring mismatch");
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const CoeffPoly& c) const {
  AlgebraElement r(ring_);
  for (const auto& [p, v] : terms_) r.add(p, v * c);
  return r;
}

AlgebraElement AlgebraElement::map_coefficients(
    const std::function<CoeffPoly(const CoeffPoly&)>& f, Ring target) const {
  AlgebraElement r(target);
  for (const auto& [p, v] : terms_) r.add(p, f(v));
  return r;
}

AlgebraElement AlgebraElement::map_keys(const std::function<BPoint(BPoint)>& f) const {
  AlgebraElement r(ring_);
  for (const auto& [p, v] : terms_) r.add(f(p), v);
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "[" + c.to_string() + "]*theta(" + p.to_string() + ")";
  }
  return s;
}

}  // namespace skein
