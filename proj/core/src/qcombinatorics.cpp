#include "skein/qcombinatorics.hpp"

#include <stdexcept>

namespace skein {

ALaurent qinteger(unsigned n) {
  std::vector<ALaurent::Term> t;
  for (unsigned i = 0; i < n; ++i) t.emplace_back(2 * static_cast<int>(n) - 2 - 4 * static_cast<int>(i), 1);
  return ALaurent::from_terms(std::move(t));
}

ALaurent qbinom(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("qbinom: k > n");
  // Gaussian Pascal triangle in q = A^4, then recentred by A^{-2k(n-k)}.
  std::vector<ALaurent> row{ALaurent(1)};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<ALaurent> next(m + 1);
    next[0] = 1;
    next[m] = 1;
    for (unsigned j = 1; j < m; ++j)
      next[j] = row[j - 1] + ALaurent::monomial(4 * static_cast<int>(j)) * row[j];
    row = std::move(next);
  }
  return ALaurent::monomial(-2 * static_cast<int>(k * (n - k))) * row[k];
}

IntPoly chebyshev(unsigned n) {
  if (n == 0) return {1};
  IntPoly prev{1};
  IntPoly cur{0, 1};
  for (unsigned m = 1; m < n; ++m) {
    IntPoly next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    // T_2 = x*T_1 - 2*T_0 since T_0 plays the role of 2 in the recursion.
    const BigInt scale = m == 1 ? 2 : 1;
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= scale * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ALaurent evaluate(const IntPoly& p, const ALaurent& x) {
  ALaurent acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + ALaurent::monomial(0, *it);
  return acc;
}

}  // namespace skein
