#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skein {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial in the quantum variable A with arbitrary-precision
/// integer coefficients. Terms are kept sorted by exponent with no zero
/// coefficients, so equality is structural.
class ALaurent {
 public:
  using Term = std::pair<int, BigInt>;

  ALaurent() = default;
  ALaurent(long long constant);  // NOLINT(google-explicit-constructor)

  /// c * A^exponent.
  static ALaurent monomial(int exponent, BigInt c = 1);
  /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
  static ALaurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  BigInt coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// True if every coefficient is >= 0.
  bool nonnegative() const;
  /// Value at A = 1.
  BigInt at_one() const;
  /// Replaces A by A^-1.
  ALaurent bar() const;
  /// Multiplies every exponent by num/den; throws std::domain_error if some
  /// exponent is not divisible by den.
  ALaurent rescale_exponents(int num, int den) const;
  /// Inverse of +-A^k, empty otherwise.
  std::optional<ALaurent> unit_inverse() const;

  ALaurent& operator+=(const ALaurent& o);
  ALaurent& operator-=(const ALaurent& o);
  ALaurent& operator*=(const ALaurent& o);
  friend ALaurent operator+(ALaurent a, const ALaurent& b) { return a += b; }
  friend ALaurent operator-(ALaurent a, const ALaurent& b) { return a -= b; }
  friend ALaurent operator*(const ALaurent& a, const ALaurent& b);
  ALaurent operator-() const;

  friend bool operator==(const ALaurent&, const ALaurent&) = default;

  /// Human-readable form, e.g. "A^2 + 3 - 2*A^-4" (descending exponents).
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// A -> A^-1 on a single Laurent polynomial.
inline ALaurent bar_involution(const ALaurent& p) { return p.bar(); }

}  // namespace skein
