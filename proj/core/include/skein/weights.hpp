#pragma once

#include "skein/coeff_poly.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace skein {

/// Element of the lattice (1/2)L in doubled coordinates over G_1..G_4:
/// twice[j] = 2 * (coefficient of G_{j+1}).
struct WeightVector {
  std::array<int, 4> twice{};
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
  WeightVector operator+(const WeightVector& o) const;
  std::string to_string() const;
};

/// Finite sum of c_w t^w over the group algebra Z[A^+-][(1/2)L].
class WeightPoly {
 public:
  WeightPoly() = default;
  WeightPoly(const ALaurent& c);  // NOLINT(google-explicit-constructor)
  static WeightPoly monomial(const WeightVector& w, const ALaurent& c = ALaurent(1));

  const std::map<WeightVector, ALaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  WeightPoly& operator+=(const WeightPoly& o);
  WeightPoly& operator-=(const WeightPoly& o);
  friend WeightPoly operator+(WeightPoly a, const WeightPoly& b) { return a += b; }
  friend WeightPoly operator-(WeightPoly a, const WeightPoly& b) { return a -= b; }
  friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);
  friend bool operator==(const WeightPoly&, const WeightPoly&) = default;
  std::string to_string() const;

 private:
  void add(const WeightVector& w, const ALaurent& c);
  std::map<WeightVector, ALaurent> terms_;
};

/// Polynomial in x with WeightPoly coefficients, index = power of x.
using XWeightPoly = std::vector<WeightPoly>;

/// The eight weights nu(L_{f,m}) of line family f = 0, 1, 2: the pairs
/// {G1,G2},{G3,G4} / {G1,G3},{G2,G4} / {G1,G4},{G2,G3} with all signs.
std::vector<WeightVector> line_weights(int family);

/// prod_m (1 + t^{w_m} x) over the given weights.
XWeightPoly weight_product(const std::vector<WeightVector>& weights);

/// Embeds a peripheral-ring polynomial via a_j = t^{G_j/2} + t^{-G_j/2}.
WeightPoly from_peripheral(const CoeffPoly& p);

XWeightPoly multiply(const XWeightPoly& a, const XWeightPoly& b);

}  // namespace skein
