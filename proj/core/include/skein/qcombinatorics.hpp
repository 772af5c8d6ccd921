#pragma once

#include "skein/laurent.hpp"

#include <vector>

namespace skein {

/// Dense integer polynomial in one variable, lowest degree first.
using IntPoly = std::vector<BigInt>;

/// Quantum integer [n]_A = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}).
ALaurent qinteger(unsigned n);

/// Symmetrized A-binomial [n]_A! / ([k]_A! [n-k]_A!). Throws
/// std::invalid_argument when k > n.
ALaurent qbinom(unsigned n, unsigned k);

/// Chebyshev polynomial with T_0 = 1, T_1 = x, T_2 = x^2 - 2 and
/// T_{n+1} = x T_n - T_{n-1}.
IntPoly chebyshev(unsigned n);

/// Evaluates an integer polynomial at a Laurent polynomial.
ALaurent evaluate(const IntPoly& p, const ALaurent& x);

}  // namespace skein
