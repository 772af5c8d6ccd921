#include "skein/coeff_poly.hpp"
#include "skein/qcombinatorics.hpp"
#include "skein/series.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace skein;

namespace {

ALaurent A(int e, long long c = 1) { return ALaurent::monomial(e, c); }

// Dense Laurent polynomial as exponent -> coefficient, used by the oracles
// below so they share no code with ALaurent.
using Dense = std::map<int, long long>;

Dense dmul(const Dense& a, const Dense& b) {
  Dense out;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Exact long division; fails the test on a nonzero remainder.
Dense ddiv(Dense num, const Dense& den) {
  Dense q;
  const auto [dtop, dc] = *den.rbegin();
  while (!num.empty()) {
    const auto [ntop, nc] = *num.rbegin();
    REQUIRE(nc % dc == 0);
    const int e = ntop - dtop;
    const long long c = nc / dc;
    q[e] += c;
    for (auto [de, dcoef] : den) num[de + e] -= c * dcoef;
    std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
    REQUIRE(q.size() < 1000);
  }
  return q;
}

Dense qint_dense(unsigned n) {
  // (A^{2n} - A^{-2n}) / (A^2 - A^{-2})
  return ddiv(Dense{{2 * static_cast<int>(n), 1}, {-2 * static_cast<int>(n), -1}}, Dense{{2, 1}, {-2, -1}});
}

Dense qfact_dense(unsigned n) {
  Dense f{{0, 1}};
  for (unsigned k = 1; k <= n; ++k) f = dmul(f, qint_dense(k));
  return f;
}

ALaurent from_dense(const Dense& d) {
  ALaurent out;
  for (auto [e, c] : d) out += A(e, c);
  return out;
}

ALaurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-6, 6), coef(-4, 4), len(0, 4);
  ALaurent out;
  for (int i = len(rng); i > 0; --i) out += A(exp(rng), coef(rng));
  return out;
}

CoeffPoly random_poly(std::mt19937& rng, Ring ring) {
  std::uniform_int_distribution<int> var(0, static_cast<int>(variable_count(ring)) - 1), pw(0, 2), len(0, 3);
  CoeffPoly out(ring);
  for (int i = len(rng); i > 0; --i)
    out += CoeffPoly::variable(ring, var(rng), static_cast<unsigned>(pw(rng))) * random_laurent(rng);
  return out;
}

}  // namespace

TEST_CASE("qbinom small values") {
  CHECK(qbinom(0, 0) == ALaurent(1));
  CHECK(qbinom(2, 1) == A(2) + A(-2));
  CHECK_THROWS_AS(qbinom(2, 3), std::invalid_argument);
}

TEST_CASE("qbinom(4,2) against exact division of q-factorials") {
  const Dense expected = ddiv(qfact_dense(4), dmul(qfact_dense(2), qfact_dense(2)));
  CHECK(qbinom(4, 2) == from_dense(expected));
  CHECK(qbinom(4, 2) == A(8) + A(4) + 2 + A(-4) + A(-8));
}

TEST_CASE("qbinom properties") {
  for (unsigned n = 0; n <= 9; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      const ALaurent b = qbinom(n, k);
      CHECK(b == qbinom(n, n - k));
      CHECK(b == b.bar());
      CHECK(b.nonnegative());
      BigInt classical = 1;
      for (unsigned i = 0; i < k; ++i) classical = classical * (n - i) / (i + 1);
      CHECK(b.at_one() == classical);
      if (k >= 1 && k < n) {
        // symmetric q-Pascal: [n,k] = A^{-2k} [n-1,k] + A^{2(n-k)} [n-1,k-1]
        const int kk = static_cast<int>(k), nn = static_cast<int>(n);
        CHECK(b == A(-2 * kk) * qbinom(n - 1, k) + A(2 * (nn - kk)) * qbinom(n - 1, k - 1));
      }
    }
}

TEST_CASE("chebyshev") {
  CHECK(chebyshev(0) == IntPoly{1});
  CHECK(chebyshev(2) == IntPoly{-2, 0, 1});
  CHECK(chebyshev(5) == IntPoly{0, 5, 0, -5, 0, 1});
  const ALaurent lam = A(1) + A(-1);
  for (unsigned n = 1; n <= 10; ++n) {
    const int e = static_cast<int>(n);
    CHECK(evaluate(chebyshev(n), lam) == A(e) + A(-e));
  }
  for (unsigned m = 1; m <= 8; ++m)
    for (unsigned n = 1; n <= 8; ++n) {
      const ALaurent x = A(3) + A(-3);
      const unsigned diff = m > n ? m - n : n - m;
      // With T_0 = 1 the m = n case reads T_{2m} + 2.
      const ALaurent low = diff == 0 ? ALaurent(2) : evaluate(chebyshev(diff), x);
      const ALaurent rhs = evaluate(chebyshev(m + n), x) + low;
      CHECK(evaluate(chebyshev(m), x) * evaluate(chebyshev(n), x) == rhs);
    }
}

TEST_CASE("bar involution") {
  CHECK((A(2) + 3).bar() == A(-2) + 3);
  CHECK(ALaurent(1).bar() == ALaurent(1));
  CHECK(qbinom(3, 1).bar() == qbinom(3, 1));
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const ALaurent a = random_laurent(rng), b = random_laurent(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
  }
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const ALaurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * ALaurent(1) == a);
    CHECK((a - a).is_zero());
  }
  for (Ring r : {Ring::S04, Ring::S11, Ring::Peripheral})
    for (int i = 0; i < 60; ++i) {
      const CoeffPoly a = random_poly(rng, r), b = random_poly(rng, r), c = random_poly(rng, r);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      for (const auto& [e, coeff] : (a * b).terms()) CHECK(!coeff.is_zero());
    }
}

TEST_CASE("CoeffPoly rejects mixed rings") {
  CHECK_THROWS(CoeffPoly::variable(Ring::S04, 0) + CoeffPoly::variable(Ring::S11, 0));
}

TEST_CASE("specialize_A4_to_A2") {
  const CoeffPoly y = CoeffPoly::variable(Ring::S04, kY);
  CHECK(specialize_A4_to_A2(y * A(4)) == y * A(2));
  CHECK(specialize_A4_to_A2(CoeffPoly(Ring::S04, 2)) == CoeffPoly(Ring::S04, 2));
  const CoeffPoly r10 = CoeffPoly::variable(Ring::S04, kR10);
  CHECK(specialize_A4_to_A2(r10 * A(2)) == r10 * A(1));
  CHECK_THROWS_AS(specialize_A4_to_A2(r10 * A(1)), std::domain_error);
  const CoeffPoly z = CoeffPoly::variable(Ring::S11, 0);
  CHECK(specialize_s04_to_s11(y * A(4) + r10 * 3) == z * A(2));
}

TEST_CASE("expand_rational_series") {
  const Ring r = Ring::S04;
  const CoeffPoly u = CoeffPoly::variable(r, kR10);
  const CoeffPoly one(r, 1);
  const auto geo = expand_rational_series(r, {one}, {{XPoly{one, -u}, 1}}, 3);
  CHECK(geo.coeffs() == std::vector<CoeffPoly>{one, u, u * u, u * u * u});
  CHECK_THROWS_AS(expand_rational_series(r, {one}, {{XPoly{CoeffPoly(r, 2), -u}, 1}}, 3), std::invalid_argument);
}

TEST_CASE("F(r,s,y,x) low orders and the x^4 term") {
  const Ring R = Ring::S04;
  const CoeffPoly r = CoeffPoly::variable(R, kR10), s = CoeffPoly::variable(R, kR01), y = CoeffPoly::variable(R, kY);
  const auto F = wall_closed_form(r, s, y, 12);
  CHECK(F.coeff(0) == CoeffPoly(R, 1));
  CHECK(F.coeff(1) == r);
  CHECK(F.coeff(2) == y);
  CHECK(F.coeff(3) == s + r * (A(-4) + 1 + A(4)));
  CHECK(F.coeff(4) == s * s + y * (A(4) + A(-4)));
  CHECK(F.nonnegative());

  // Oracle: the series times the denominator reproduces the closed-form
  // numerator, written out term by term from the definition.
  const CoeffPoly one(R, 1), zero(R);
  auto scale = [&](const XPoly& p, const CoeffPoly& c, unsigned shift) {
    XPoly out(shift + p.size(), zero);
    for (std::size_t i = 0; i < p.size(); ++i) out[i + shift] = p[i] * c;
    return out;
  };
  auto mul = [&](const XPoly& a, const XPoly& b) {
    XPoly out(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  auto add = [&](XPoly a, const XPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), zero);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  };
  const XPoly d_minus{one, zero, CoeffPoly(R, -A(-4))};
  const XPoly d_plus{one, zero, CoeffPoly(R, -A(4))};
  const XPoly d0{one, zero, CoeffPoly(R, -1)};
  const XPoly D1 = mul(d_minus, d_plus);
  const XPoly D2 = mul(D1, mul(d0, d0));
  // 1 + r x (1 + x^2)/D1 + y x^2/D1 + s x^3 (1 + s x + x^2)/D2, times D2
  XPoly num = D2;
  num = add(num, scale(mul(XPoly{one, zero, one}, mul(d0, d0)), r, 1));
  num = add(num, scale(mul(d0, d0), y, 2));
  num = add(num, scale(XPoly{one, s, one}, s, 3));
  const XPoly prod = mul(F.coeffs(), D2);
  for (std::size_t k = 0; k <= 12; ++k) CHECK(prod[k] == (k < num.size() ? num[k] : zero));
}

TEST_CASE("G(z,x) and its x^4 term") {
  const CoeffPoly z = CoeffPoly::variable(Ring::S11, 0);
  const auto G = wall_G(z, 12);
  CHECK(G.coeff(1).is_zero());
  CHECK(G.coeff(2) == z);
  CHECK(G.coeff(3).is_zero());
  CHECK(G.coeff(4) == z * (A(2) + A(-2)));
  CHECK(G.nonnegative());
  // z x^2 / ((1 - A^-2 x^2)(1 - A^2 x^2)) = z sum_k [k+1]-type sums: coefficient
  // of x^{2k+2} is z (A^{2k} + A^{2k-4} + ... + A^{-2k}).
  for (unsigned k = 0; k <= 5; ++k) {
    ALaurent h;
    for (int j = 0; j <= static_cast<int>(k); ++j) h += A(2 * static_cast<int>(k) - 4 * j);
    CHECK(G.coeff(2 * k + 2) == z * h);
    CHECK(G.coeff(2 * k + 1).is_zero());
  }
}

TEST_CASE("RaySeries invariants") {
  CHECK_THROWS_AS(RaySeries(Ring::S11, {CoeffPoly(Ring::S11, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(RaySeries(Ring::S11, {}), std::invalid_argument);
}
