#include "skein/peripheral.hpp"

#include "skein/qcombinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace skein {

namespace {

constexpr Ring P = Ring::Peripheral;

CoeffPoly a(int j) { return CoeffPoly::variable(P, j); }

Exponents cheb(std::initializer_list<std::pair<int, unsigned>> parts) {
  Exponents e{};
  for (auto [j, n] : parts) e[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(n);
  return e;
}

// Product of two single-variable Chebyshev factors, as (index, multiplicity) pairs.
std::vector<std::pair<unsigned, int>> cheb_times(unsigned m, unsigned n) {
  if (m == 0) return {{n, 1}};
  if (n == 0) return {{m, 1}};
  if (m == n) return {{2 * m, 1}, {0, 2}};
  return {{m + n, 1}, {m > n ? m - n : n - m, 1}};
}

CoeffPoly cert_product(const CoeffPoly& x, const CoeffPoly& y) {
  CoeffPoly out(P);
  for (const auto& [ex, cx] : x.terms())
    for (const auto& [ey, cy] : y.terms()) {
      std::vector<std::pair<Exponents, int>> acc{{Exponents{}, 1}};
      for (std::size_t j = 0; j < 4; ++j) {
        std::vector<std::pair<Exponents, int>> next;
        for (const auto& [e, mult] : acc)
          for (auto [idx, k] : cheb_times(ex[j], ey[j])) {
            Exponents f = e;
            f[j] = static_cast<std::uint16_t>(idx);
            next.emplace_back(f, mult * k);
          }
        acc = std::move(next);
      }
      const ALaurent c = cx * cy;
      for (const auto& [e, mult] : acc) out += CoeffPoly::monomial(P, e, c * ALaurent(mult));
    }
  return out;
}

std::array<CoeffPoly, 4> variable_certificates() {
  const CoeffPoly one(P, 1);
  auto m = [](Exponents e) { return CoeffPoly::monomial(P, e, ALaurent(1)); };
  CoeffPoly y = m(cheb({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  for (int j = 0; j < 4; ++j) y += m(cheb({{j, 2}}));
  y += CoeffPoly(P, ALaurent::monomial(4) + ALaurent(6) + ALaurent::monomial(-4));
  return {m(cheb({{0, 1}, {1, 1}})) + m(cheb({{2, 1}, {3, 1}})),
          m(cheb({{0, 1}, {2, 1}})) + m(cheb({{1, 1}, {3, 1}})),
          m(cheb({{0, 1}, {3, 1}})) + m(cheb({{1, 1}, {2, 1}})), y};
}

}  // namespace

CoeffPoly peripheral_substitute(const CoeffPoly& p) {
  if (p.ring() != Ring::S04) throw std::invalid_argument("peripheral_substitute: expects R10, R01, R11, y");
  const ALaurent gap = ALaurent::monomial(2) - ALaurent::monomial(-2);
  CoeffPoly y = a(0) * a(1) * a(2) * a(3) + CoeffPoly(P, gap * gap);
  for (int j = 0; j < 4; ++j) y += a(j).pow(2);
  const std::array<CoeffPoly, 4> images{a(0) * a(1) + a(2) * a(3), a(0) * a(2) + a(1) * a(3),
                                        a(0) * a(3) + a(1) * a(2), y};
  return p.substitute(P, images);
}

CoeffPoly chebyshev_certificate(const CoeffPoly& p) {
  if (p.ring() != Ring::S04) throw std::invalid_argument("chebyshev_certificate: expects R10, R01, R11, y");
  if (!p.nonnegative())
    throw std::domain_error("chebyshev_certificate: negative coefficient, no certificate");
  static const std::array<CoeffPoly, 4> vars = variable_certificates();
  CoeffPoly out(P);
  for (const auto& [e, c] : p.terms()) {
    CoeffPoly term(P, c);
    for (std::size_t j = 0; j < 4; ++j)
      for (unsigned k = 0; k < e[j]; ++k) term = cert_product(term, vars[j]);
    out += term;
  }
  return out;
}

CoeffPoly expand_certificate(const CoeffPoly& cert) {
  if (cert.ring() != P) throw std::invalid_argument("expand_certificate: expects a certificate");
  CoeffPoly out(P);
  for (const auto& [e, c] : cert.terms()) {
    CoeffPoly term(P, c);
    for (std::size_t j = 0; j < 4; ++j) {
      const IntPoly t = chebyshev(e[j]);
      CoeffPoly tj(P);
      for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] != 0)
          tj += CoeffPoly::variable(P, static_cast<int>(j), static_cast<unsigned>(k)) *
                ALaurent::monomial(0, t[k]);
      term *= tj;
    }
    out += term;
  }
  return out;
}

}  // namespace skein
