#pragma once

#include "skein/coeff_poly.hpp"

#include <utility>
#include <vector>

namespace skein {

/// Polynomial in a formal variable x with CoeffPoly coefficients,
/// lowest degree first.
using XPoly = std::vector<CoeffPoly>;

/// Truncated power series c_0 + c_1 x + ... + c_N x^N with c_0 = 1.
class RaySeries {
 public:
  /// Throws std::invalid_argument if coeffs is empty or c_0 != 1.
  RaySeries(Ring ring, std::vector<CoeffPoly> coeffs);

  Ring ring() const { return ring_; }
  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<CoeffPoly>& coeffs() const { return coeffs_; }
  /// c_k, or zero beyond the stored order.
  const CoeffPoly& coeff(unsigned k) const;
  bool nonnegative() const;
  RaySeries truncated(unsigned order) const;
  /// Adds `delta` to c_k (k >= 1); used to build deliberately broken diagrams.
  RaySeries perturbed(unsigned k, const CoeffPoly& delta) const;

  friend bool operator==(const RaySeries&, const RaySeries&) = default;

 private:
  Ring ring_;
  std::vector<CoeffPoly> coeffs_;
  CoeffPoly zero_;
};

/// numerator / prod(factor^multiplicity) expanded to x^order. Every factor and
/// the numerator must have constant term 1.
RaySeries expand_rational_series(Ring ring, const XPoly& numerator,
                                 const std::vector<std::pair<XPoly, unsigned>>& denom_factors,
                                 unsigned order);

/// Closed form F(r,s,y,x) of the four-punctured sphere walls.
RaySeries wall_closed_form(const CoeffPoly& r, const CoeffPoly& s, const CoeffPoly& y,
                           unsigned order);

/// Wall obtained from the eight-fold product prod(1 + t^w x) over the
/// vector-multiplet denominator, written in R/y variables. `r` is the wall's
/// own variable, `b` and `c` the two others.
RaySeries wall_product_form(const CoeffPoly& r, const CoeffPoly& b, const CoeffPoly& c,
                            const CoeffPoly& y, unsigned order);

/// G(z,x) = 1 + z x^2 / ((1 - A^-2 x^2)(1 - A^2 x^2)).
RaySeries wall_G(const CoeffPoly& z, unsigned order);

/// Common denominator (1 - A^-4 x^2)(1 - x^2)^2(1 - A^4 x^2) as factor list.
std::vector<std::pair<XPoly, unsigned>> sphere_denominator(Ring ring);

}  // namespace skein
