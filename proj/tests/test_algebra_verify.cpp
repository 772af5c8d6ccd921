#include "skein/peripheral.hpp"
#include "skein/verify.hpp"
#include "skein/weights.hpp"

#include <doctest.h>

#include <random>

using namespace skein;

namespace {

ALaurent A(int e) { return ALaurent::monomial(e); }
CoeffPoly cst(Ring r, const ALaurent& c) { return CoeffPoly(r, c); }
CoeffPoly var(int i) { return CoeffPoly::variable(Ring::S04, i); }
CoeffPoly avar(int i) { return CoeffPoly::variable(Ring::Peripheral, i); }

NormalElement gen(Ring r, int j) { return NormalElement::generator(r, j); }

// Chebyshev T_n(a) from T_0 = 2, T_1 = a, T_{n+1} = a T_n - T_{n-1}; T_0 is
// read as 1 in a certificate product, matching a1^0 = 1.
CoeffPoly cheb(int i, unsigned n) {
  if (n == 0) return cst(Ring::Peripheral, 1);
  CoeffPoly prev = cst(Ring::Peripheral, 2), cur = avar(i);
  for (unsigned k = 1; k < n; ++k) {
    CoeffPoly next = avar(i) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CoeffPoly expand_oracle(const CoeffPoly& cert) {
  CoeffPoly out(Ring::Peripheral);
  for (const auto& [e, c] : cert.terms()) {
    CoeffPoly t = cst(Ring::Peripheral, c);
    for (int i = 0; i < 4; ++i) t *= cheb(i, e[static_cast<std::size_t>(i)]);
    out += t;
  }
  return out;
}

CoeffPoly random_nonnegative(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 2), coef(0, 3), aexp(-4, 4), count(1, 4);
  CoeffPoly p(Ring::S04);
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    Exponents e{};
    for (auto& x : e) x = static_cast<std::uint16_t>(deg(rng));
    p += CoeffPoly::monomial(Ring::S04, e, A(aexp(rng)) * ALaurent(coef(rng)));
  }
  return p;
}

bool has_witness_if_failed(const Report& r) { return r.passed() || !r.witnesses.empty(); }

}  // namespace

TEST_CASE("stated commutators hold after rewriting") {
  const Ring r = Ring::S04;
  // A^-2 g_i g_{i+1} - A^2 g_{i+1} g_i = (A^-4 - A^4) g_{i+2} - (A^2 - A^-2) R_i
  const std::array<int, 3> rvar{kR11, kR10, kR01};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const NormalElement lhs = nc_product(Preset::S04, gen(r, i), gen(r, j)).scaled(cst(r, A(-2))) -
                              nc_product(Preset::S04, gen(r, j), gen(r, i)).scaled(cst(r, A(2)));
    const NormalElement rhs = gen(r, k).scaled(cst(r, A(-4) - A(4))) -
                              NormalElement::constant(var(rvar[static_cast<std::size_t>(i)]) * (A(2) - A(-2)));
    CHECK(lhs == rhs);
  }
  // g2 g1 in the normal order
  NormalElement want(r);
  want.add({0, 1, 1}, cst(r, A(-4)));
  want.add({2, 1, 0}, cst(r, A(2) - A(-6)));
  want.add({}, var(kR11) * (ALaurent(1) - A(-4)));
  CHECK(nc_product(Preset::S04, gen(r, 1), gen(r, 0)) == want);
  const NormalElement g1sq = nc_product(Preset::S04, gen(r, 0), gen(r, 0));
  CHECK(g1sq == NormalElement::monomial(r, {0, 2, 0}));
}

TEST_CASE("stated cubic holds after rewriting") {
  const Ring r = Ring::S04;
  const NormalElement g12 = nc_product(Preset::S04, gen(r, 0), gen(r, 1));
  const NormalElement lhs = nc_product(Preset::S04, g12, gen(r, 2)).scaled(cst(r, A(-2)));
  auto sq = [&](int j) { return nc_product(Preset::S04, gen(r, j), gen(r, j)); };
  const NormalElement rhs = sq(0).scaled(cst(r, A(-4))) + sq(1).scaled(cst(r, A(4))) + sq(2).scaled(cst(r, A(-4))) +
                            gen(r, 0).scaled(var(kR10) * A(-2)) + gen(r, 1).scaled(var(kR01) * A(2)) +
                            gen(r, 2).scaled(var(kR11) * A(-2)) +
                            NormalElement::constant(var(kY) - cst(r, A(4) * ALaurent(2) + A(-4) * ALaurent(2)));
  CHECK(lhs == rhs);
}

TEST_CASE("rewriting is associative on normal monomials") {
  for (Preset preset : {Preset::S04, Preset::S11}) {
    const Ring r = preset == Preset::S04 ? Ring::S04 : Ring::S11;
    std::vector<NormalElement> monos;
    for (const auto& p : points_up_to(3)) monos.push_back(NormalElement::monomial(r, normal_monomial(p)));
    for (const auto& x : monos)
      for (const auto& y : monos) {
        const NormalElement xy = nc_product(preset, x, y);
        for (const auto& z : monos)
          CHECK(nc_product(preset, xy, z) == nc_product(preset, x, nc_product(preset, y, z)));
      }
  }
}

TEST_CASE("theta_to_monomials examples") {
  const auto cfg = DiagramConfig::s04();
  const Ring r = Ring::S04;
  NormalElement want(r);
  want.add({0, 1, 1}, cst(r, A(-2)));
  want.add({2, 1, 0}, cst(r, -A(-4)));
  want.add({}, var(kR11) * -A(-2));
  CHECK(theta_to_monomials(cfg, {1, 1}) == want);
  NormalElement sq(r);
  sq.add({0, 2, 0}, cst(r, 1));
  sq.add({}, cst(r, -2));
  CHECK(theta_to_monomials(cfg, {2, 0}) == sq);
  for (int j = 0; j < 3; ++j) CHECK(theta_to_monomials(cfg, canonicalize(cone_generator(j))) == gen(r, j));
  CHECK(theta_to_monomials(cfg, {0, 0}) == NormalElement::constant(cst(r, 1)));
}

TEST_CASE("basis changes are mutually inverse") {
  for (const auto& cfg : {DiagramConfig::s04(), DiagramConfig::s11()}) {
    const ThetaAlgebra alg(cfg);
    const MonomialBasis basis(alg);
    for (const auto& p : points_up_to(6)) {
      const NormalElement nf = basis.theta_to_monomials(p);
      CHECK(basis.monomials_to_theta(nf) == AlgebraElement::theta(cfg.ring, p));
      // triangular: the top monomial is n[p] with a power of A in front
      CHECK(nf.degree() == f_norm(p));
      const CoeffPoly lead = nf.coeff(normal_monomial(p));
      REQUIRE(lead.terms().size() == 1);
      CHECK(lead.terms().front().first == Exponents{});
      CHECK(lead.constant_term().terms().size() == 1);
      const AlgebraElement m = basis.monomial(normal_monomial(p));
      CHECK(basis.theta_to_monomials(m) == NormalElement::monomial(cfg.ring, normal_monomial(p)));
    }
  }
}

TEST_CASE("peripheral substitution and certificate") {
  const Ring P = Ring::Peripheral;
  CHECK(peripheral_substitute(var(kR11)) == avar(0) * avar(3) + avar(1) * avar(2));
  CHECK(peripheral_substitute(var(kR10)) == avar(0) * avar(1) + avar(2) * avar(3));
  CHECK(peripheral_substitute(var(kR01)) == avar(0) * avar(2) + avar(1) * avar(3));
  const CoeffPoly y_img = avar(0) * avar(1) * avar(2) * avar(3) + avar(0).pow(2) + avar(1).pow(2) + avar(2).pow(2) +
                          avar(3).pow(2) + cst(P, (A(2) - A(-2)) * (A(2) - A(-2)));
  CHECK(peripheral_substitute(var(kY)) == y_img);
  const CoeffPoly y_cert = avar(0) * avar(1) * avar(2) * avar(3) + avar(0).pow(2) + avar(1).pow(2) + avar(2).pow(2) +
                           avar(3).pow(2) + cst(P, A(4) + ALaurent(6) + A(-4));
  CHECK(chebyshev_certificate(var(kY)) == y_cert);
  CHECK(expand_oracle(y_cert) == y_img);
  CHECK_THROWS_AS(chebyshev_certificate(var(kY) - var(kR10)), std::domain_error);

  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    const CoeffPoly p = random_nonnegative(rng);
    const CoeffPoly cert = chebyshev_certificate(p);
    CHECK(cert.nonnegative());
    CHECK(expand_certificate(cert) == peripheral_substitute(p));
    CHECK(expand_oracle(cert) == peripheral_substitute(p));
  }
  // the substitution is a ring map
  for (int i = 0; i < 20; ++i) {
    const CoeffPoly a = random_nonnegative(rng), b = random_nonnegative(rng);
    CHECK(peripheral_substitute(a * b) == peripheral_substitute(a) * peripheral_substitute(b));
  }
}

TEST_CASE("line weights") {
  for (int f = 0; f < 3; ++f) {
    const auto ws = line_weights(f);
    REQUIRE(ws.size() == 8);
    for (const auto& w : ws) {
      int nonzero = 0;
      for (int c : w.twice) {
        CHECK((c == 0 || c == 1 || c == -1));
        nonzero += c != 0;
      }
      CHECK(nonzero == 2);
    }
  }
  // x^1 is R10 and x^2 is y - A^4 - 2 - A^-4 in weight variables
  const XWeightPoly prod = weight_product(line_weights(0));
  REQUIRE(prod.size() == 9);
  CHECK(prod[0] == WeightPoly(ALaurent(1)));
  CHECK(prod[8] == WeightPoly(ALaurent(1)));
  CHECK(prod[1] == from_peripheral(peripheral_substitute(var(kR10))));
  CHECK(prod[2] == from_peripheral(peripheral_substitute(var(kY) - cst(Ring::S04, A(4) + ALaurent(2) + A(-4)))));
  CHECK(weight_product(line_weights(1))[1] == from_peripheral(peripheral_substitute(var(kR01))));
  CHECK(weight_product(line_weights(2))[1] == from_peripheral(peripheral_substitute(var(kR11))));
  // palindromic
  for (std::size_t k = 0; k <= 8; ++k) CHECK(prod[k] == prod[8 - k]);
}

TEST_CASE("weight identity suite") {
  const Report r = verify_weight_identity(10);
  CHECK(r.passed());
  CHECK(r.failures == 0);
  CHECK(r.checks >= 90);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("psl2 variable permutations") {
  CHECK(psl2_variable_permutation(Matrix2::identity()) == std::array<int, kMaxVars>{0, 1, 2, 3});
  CHECK(psl2_variable_permutation(Matrix2::S()) == std::array<int, kMaxVars>{1, 2, 0, 3});
  CHECK(psl2_variable_permutation(Matrix2::T()) == std::array<int, kMaxVars>{0, 2, 1, 3});
  const ThetaAlgebra alg(DiagramConfig::s04());
  CHECK(verify_psl2_equivariance(alg, Matrix2::S(), {{{1, 0}, {0, 1}}}).passed());
  CHECK(verify_psl2_equivariance(alg, Matrix2::T(), {{{1, 0}, {1, 0}}}).passed());
  CHECK(verify_psl2_equivariance(alg, Matrix2::identity(), pairs_with_total(3)).passed());
  CHECK(verify_psl2_equivariance(alg, Matrix2::S() * Matrix2::T(), pairs_with_total(3)).passed());
}

TEST_CASE("torus limit example") {
  const ThetaAlgebra s11(DiagramConfig::s11());
  const Ring r = Ring::S11;
  const CoeffPoly zero(r);
  auto at_z0 = [&](const AlgebraElement& e) {
    AlgebraElement out(r);
    for (const auto& [p, c] : e.terms()) {
      const CoeffPoly v = c.substitute_one(0, zero);
      if (!v.is_zero()) out.add(p, v);
    }
    return out;
  };
  AlgebraElement want(r);
  want.add({2, 1}, cst(r, A(2)));
  want.add({-2, 1}, cst(r, A(-2)));
  CHECK(at_z0(s11.product({2, 0}, {0, 1})) == want);
  CHECK(verify_torus_limit(s11, 3).passed());
}

TEST_CASE("specialization examples") {
  const ThetaAlgebra s04(DiagramConfig::s04()), s11(DiagramConfig::s11());
  CHECK(verify_specialization(s04, s11, {{{1, 0}, {0, 1}}, {{1, 0}, {1, 0}}, {{1, 1}, {-1, 1}}}).passed());
}

TEST_CASE("suites pass at small sizes") {
  for (const auto& cfg : {DiagramConfig::s04(), DiagramConfig::s11()}) {
    const ThetaAlgebra alg(cfg);
    const NcAlgebra nc(cfg.surface == Surface::S04 ? Presentation::s04() : Presentation::s11());
    for (const Report& r : {verify_hand_products(alg), verify_chebyshev_ladder(alg, 4),
                            verify_presentation_relations(alg), verify_consistency(alg, 3),
                            verify_associativity(alg, 2), verify_positivity(alg, 4),
                            verify_oracle_equivalence(alg, nc, 3), verify_properties(alg, 3)}) {
      INFO(r.name, " on ", surface_name(cfg.surface));
      CHECK(r.passed());
      CHECK(r.checks > 0);
      CHECK(r.witnesses.empty());
    }
  }
  CHECK(verify_series_positivity(12).passed());
}

TEST_CASE("injected defects are caught") {
  auto cfg = DiagramConfig::s04();
  cfg.perturbation = [](BPoint d, const RaySeries& s) {
    return d == BPoint{1, 1} ? s.perturbed(1, CoeffPoly(Ring::S04, 1)) : s;
  };
  const ThetaAlgebra bad(cfg);
  for (const Report& r : {verify_presentation_relations(bad), verify_associativity(bad, 2)}) {
    INFO(r.name);
    CHECK_FALSE(r.passed());
    CHECK(r.failures > 0);
    CHECK_FALSE(r.witnesses.empty());
    CHECK(has_witness_if_failed(r));
  }

  const Report neg = positivity_report("flipped", {{"ok", var(kR10)}, {"flipped", -var(kR10) * A(2)}});
  CHECK_FALSE(neg.passed());
  REQUIRE(neg.witnesses.size() == 1);
  CHECK(neg.witnesses[0].input == "flipped");

  const ThetaAlgebra good(DiagramConfig::s04());
  const NcAlgebra nc(Presentation::s04().with_perturbed_constant(0, CoeffPoly(Ring::S04, 1)));
  const Report oracle = verify_oracle_equivalence(good, nc, 2);
  CHECK_FALSE(oracle.passed());
  CHECK_FALSE(oracle.witnesses.empty());
  CHECK(oracle.witnesses.size() <= Report::kMaxWitnesses);
}

TEST_CASE("report plumbing") {
  Report r("x");
  r.check(true, "a", "1", "1");
  CHECK(r.passed());
  r.check(false, "b", "1", "2");
  CHECK_FALSE(r.passed());
  CHECK(r.checks == 2);
  CHECK(r.failures == 1);
  Report outer("outer");
  outer.absorb(r);
  CHECK_FALSE(outer.passed());
  CHECK(outer.witnesses.size() == 1);
  CHECK(status_name(Status::Pass) == "PASS");
  CHECK(nonzero_points(2).size() == points_up_to(2).size() - 1);
  for (const auto& [a, b] : pairs_with_total(5)) CHECK(f_norm(a) + f_norm(b) <= 5);
  CHECK(pairs_with_total(2).size() == 9);
}
