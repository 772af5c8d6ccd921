#pragma once

#include "skein/coeff_poly.hpp"

namespace skein {

/// R10 -> a1a2 + a3a4, R01 -> a1a3 + a2a4, R11 -> a1a4 + a2a3,
/// y -> a1a2a3a4 + a1^2 + a2^2 + a3^2 + a4^2 + (A^2 - A^-2)^2.
CoeffPoly peripheral_substitute(const CoeffPoly& p);

/// Rewrites an S04 polynomial with nonnegative coefficients as a combination
/// of products T_{n1}(a1) T_{n2}(a2) T_{n3}(a3) T_{n4}(a4). The result is a
/// Peripheral-ring polynomial whose exponent vector (n1..n4) names that
/// product; every coefficient is nonnegative. Throws std::domain_error on a
/// negative input coefficient.
CoeffPoly chebyshev_certificate(const CoeffPoly& p);

/// Expands a certificate back into ordinary a-monomials.
CoeffPoly expand_certificate(const CoeffPoly& cert);

}  // namespace skein
