#pragma once

#include "skein/affine_base.hpp"
#include "skein/coeff_poly.hpp"

#include <functional>
#include <map>
#include <string>

namespace skein {

/// Finite sum of theta functions: canonical point -> coefficient.
class AlgebraElement {
 public:
  explicit AlgebraElement(Ring ring = Ring::S04) : ring_(ring) {}
  static AlgebraElement theta(Ring ring, BPoint p, const CoeffPoly& c);
  static AlgebraElement theta(Ring ring, BPoint p) { return theta(ring, p, CoeffPoly(ring, 1)); }

  Ring ring() const { return ring_; }
  const std::map<BPoint, CoeffPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CoeffPoly coeff(BPoint p) const;

  /// Adds c * theta_p. Throws on a non-canonical key or ring mismatch.
  void add(BPoint p, const CoeffPoly& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement scaled(const CoeffPoly& c) const;
  AlgebraElement map_coefficients(const std::function<CoeffPoly(const CoeffPoly&)>& f,
                                  Ring target) const;
  AlgebraElement map_keys(const std::function<BPoint(BPoint)>& f) const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  std::string to_string() const;

 private:
  Ring ring_;
  std::map<BPoint, CoeffPoly> terms_;
};

}  // namespace skein
