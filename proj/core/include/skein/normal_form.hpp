#pragma once

#include "skein/affine_base.hpp"
#include "skein/coeff_poly.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace skein {

/// Normal monomial g_j^a g_{j+1}^b (generator indices mod 3). Canonical form
/// is cone_decompose of the corresponding point of B(Z): pure powers use b = 0.
using NormalMonomial = ConeCoords;

NormalMonomial normal_monomial(BPoint p);
BPoint monomial_point(const NormalMonomial& w);
/// Total degree a + b.
std::int64_t monomial_degree(const NormalMonomial& w);
/// "1", "g1^2", "g3 g1^2", ...
std::string monomial_name(const NormalMonomial& w);

/// Linear combination of normal monomials.
class NormalElement {
 public:
  explicit NormalElement(Ring ring = Ring::S04) : ring_(ring) {}
  static NormalElement monomial(Ring ring, const NormalMonomial& w, const CoeffPoly& c);
  static NormalElement monomial(Ring ring, const NormalMonomial& w) {
    return monomial(ring, w, CoeffPoly(ring, 1));
  }
  /// The generator g_{j+1} (j = 0, 1, 2).
  static NormalElement generator(Ring ring, int j);
  static NormalElement constant(const CoeffPoly& c);

  Ring ring() const { return ring_; }
  const std::map<NormalMonomial, CoeffPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CoeffPoly coeff(const NormalMonomial& w) const;
  std::int64_t degree() const;

  /// Adds c * w; w must be canonical.
  void add(const NormalMonomial& w, const CoeffPoly& c);
  NormalElement& operator+=(const NormalElement& o);
  NormalElement& operator-=(const NormalElement& o);
  friend NormalElement operator+(NormalElement a, const NormalElement& b) { return a += b; }
  friend NormalElement operator-(NormalElement a, const NormalElement& b) { return a -= b; }
  NormalElement scaled(const CoeffPoly& c) const;
  friend bool operator==(const NormalElement&, const NormalElement&) = default;
  std::string to_string() const;

 private:
  Ring ring_;
  std::map<NormalMonomial, CoeffPoly> terms_;
};

/// Generators g_1, g_2, g_3 subject to
///   g_{i+1} g_i = L g_i g_{i+1} + M g_{i+2} + C_{i+2}
/// and the cubic expressing g_1 g_2 g_3 in degree <= 2.
struct Presentation {
  Ring ring = Ring::S04;
  ALaurent L;
  ALaurent M;
  std::array<CoeffPoly, 3> C;
  /// g_1 g_2 g_3 written in normal monomials of degree <= 2.
  NormalElement cubic;

  /// The four-punctured sphere relations, solved for the normal order.
  static Presentation s04();
  /// s04() with A^4 -> A^2, R -> 0, y -> z.
  static Presentation s11();
  /// Returns a copy with `delta` added to the constant C_k.
  Presentation with_perturbed_constant(int k, const CoeffPoly& delta) const;
};

/// Rewriting engine for the presentation. Products reduce to the normal basis
/// by right-multiplying one generator at a time; results are memoized.
class NcAlgebra {
 public:
  explicit NcAlgebra(Presentation pres);

  const Presentation& presentation() const { return pres_; }
  Ring ring() const { return pres_.ring; }
  /// g_j g_{j+1} g_{j+2} in normal form; index 0 is the stated cubic, the
  /// other two are derived from it and the commutators.
  const NormalElement& cubic(int j) const { return cubics_[static_cast<std::size_t>(j)]; }

  /// w * g_{k+1} in normal form.
  NormalElement mul_generator(const NormalMonomial& w, int k) const;
  NormalElement mul_generator(const NormalElement& x, int k) const;
  NormalElement product(const NormalElement& x, const NormalElement& y) const;

 private:
  NormalElement reduce(const NormalMonomial& w, int k, int depth) const;
  NormalElement times_generator(const NormalElement& x, int k, int depth) const;
  NormalElement times_element(const NormalElement& x, const NormalElement& y, int depth) const;

  Presentation pres_;
  std::array<NormalElement, 3> cubics_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<NormalMonomial, int>, NormalElement> cache_;
};

enum class Preset { S04, S11 };

/// Product of normal elements in the preset's presentation.
NormalElement nc_product(Preset preset, const NormalElement& x, const NormalElement& y);

}  // namespace skein
