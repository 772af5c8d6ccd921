#include "skein/weights.hpp"

#include <stdexcept>

namespace skein {

WeightVector WeightVector::operator+(const WeightVector& o) const {
  WeightVector r;
  for (std::size_t j = 0; j < 4; ++j) r.twice[j] = twice[j] + o.twice[j];
  return r;
}

std::string WeightVector::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < 4; ++j) {
    if (j) s += ", ";
    s += twice[j] % 2 == 0 ? std::to_string(twice[j] / 2) : std::to_string(twice[j]) + "/2";
  }
  return s + ")";
}

WeightPoly::WeightPoly(const ALaurent& c) { add({}, c); }

WeightPoly WeightPoly::monomial(const WeightVector& w, const ALaurent& c) {
  WeightPoly p;
  p.add(w, c);
  return p;
}

void WeightPoly::add(const WeightVector& w, const ALaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
  WeightPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
  return out;
}

std::string WeightPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*t^" + w.to_string();
  }
  return s;
}

std::vector<WeightVector> line_weights(int family) {
  static constexpr std::array<std::array<std::array<int, 2>, 2>, 3> pairs{{
      {{{0, 1}, {2, 3}}},
      {{{0, 2}, {1, 3}}},
      {{{0, 3}, {1, 2}}},
  }};
  if (family < 0 || family > 2) throw std::out_of_range("line_weights: family must be 0, 1 or 2");
  std::vector<WeightVector> out;
  for (const auto& pr : pairs[static_cast<std::size_t>(family)])
    for (int e1 : {1, -1})
      for (int e2 : {1, -1}) {
        WeightVector w;
        w.twice[static_cast<std::size_t>(pr[0])] = e1;
        w.twice[static_cast<std::size_t>(pr[1])] = e2;
        out.push_back(w);
      }
  return out;
}

XWeightPoly multiply(const XWeightPoly& a, const XWeightPoly& b) {
  if (a.empty() || b.empty()) return {};
  XWeightPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

XWeightPoly weight_product(const std::vector<WeightVector>& weights) {
  XWeightPoly acc{WeightPoly(ALaurent(1))};
  for (const auto& w : weights) acc = multiply(acc, {WeightPoly(ALaurent(1)), WeightPoly::monomial(w)});
  return acc;
}

WeightPoly from_peripheral(const CoeffPoly& p) {
  if (p.ring() != Ring::Peripheral) throw std::invalid_argument("from_peripheral: expects a1..a4");
  std::array<WeightPoly, 4> a;
  for (std::size_t j = 0; j < 4; ++j) {
    WeightVector plus, minus;
    plus.twice[j] = 1;
    minus.twice[j] = -1;
    a[j] = WeightPoly::monomial(plus) + WeightPoly::monomial(minus);
  }
  WeightPoly out;
  for (const auto& [e, c] : p.terms()) {
    WeightPoly term(c);
    for (std::size_t j = 0; j < 4; ++j)
      for (unsigned k = 0; k < e[j]; ++k) term = term * a[j];
    out += term;
  }
  return out;
}

}  // namespace skein
