#pragma once

#include "skein/laurent.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skein {

/// Commuting variable sets used as coefficient rings.
enum class Ring {
  S04,        // R10, R01, R11, y
  S11,        // z
  Peripheral  // a1, a2, a3, a4
};

inline constexpr std::size_t kMaxVars = 4;
using Exponents = std::array<std::uint16_t, kMaxVars>;

std::size_t variable_count(Ring ring);
std::span<const std::string_view> variable_names(Ring ring);
std::string_view ring_name(Ring ring);
/// Index of a variable name in the ring, or -1.
int variable_index(Ring ring, std::string_view name);

// Variable indices in Ring::S04.
inline constexpr int kR10 = 0;
inline constexpr int kR01 = 1;
inline constexpr int kR11 = 2;
inline constexpr int kY = 3;

/// Polynomial in the ring's commuting variables with ALaurent coefficients.
/// Terms are sorted by exponent vector; zero coefficients are never stored.
class CoeffPoly {
 public:
  using Term = std::pair<Exponents, ALaurent>;

  explicit CoeffPoly(Ring ring = Ring::S04) : ring_(ring) {}
  CoeffPoly(Ring ring, const ALaurent& constant);

  static CoeffPoly variable(Ring ring, int index, unsigned power = 1);
  static CoeffPoly monomial(Ring ring, const Exponents& e, const ALaurent& c);
  static CoeffPoly from_terms(Ring ring, std::vector<Term> terms);

  Ring ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ALaurent coeff(const Exponents& e) const;
  /// Constant term (all exponents zero).
  ALaurent constant_term() const { return coeff(Exponents{}); }
  /// Largest total degree in the ring variables; 0 for the zero polynomial.
  unsigned total_degree() const;

  bool nonnegative() const;
  CoeffPoly bar() const;
  /// Applies A -> 1 to every coefficient, keeping the variables.
  CoeffPoly at_A_one() const;
  CoeffPoly map_coefficients(const std::function<ALaurent(const ALaurent&)>& f) const;
  /// Permutes variables: new exponent of variable perm[i] is the old exponent of i.
  CoeffPoly permute_variables(const std::array<int, kMaxVars>& perm) const;
  /// Substitutes every variable by a polynomial in `target` ring.
  CoeffPoly substitute(Ring target, std::span<const CoeffPoly> images) const;
  /// Sets the listed variable to a polynomial in the same ring.
  CoeffPoly substitute_one(int index, const CoeffPoly& image) const;

  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly& operator*=(const CoeffPoly& o);
  CoeffPoly& operator*=(const ALaurent& c);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(CoeffPoly a, const ALaurent& c) { return a *= c; }
  friend CoeffPoly operator*(const ALaurent& c, CoeffPoly a) { return a *= c; }
  CoeffPoly operator-() const;
  CoeffPoly pow(unsigned k) const;

  friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

  std::string to_string() const;

 private:
  void check_ring(const CoeffPoly& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Halves every A-exponent. Throws std::domain_error on an odd exponent.
CoeffPoly specialize_A4_to_A2(const CoeffPoly& p);

/// Full map from the S04 coefficient ring to the S11 one: A^4 -> A^2,
/// R10 = R01 = R11 = 0, y -> z.
CoeffPoly specialize_s04_to_s11(const CoeffPoly& p);

}  // namespace skein
