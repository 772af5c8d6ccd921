#pragma once

#include "skein/basis.hpp"
#include "skein/broken_lines.hpp"
#include "skein/normal_form.hpp"

#include <string>
#include <utility>
#include <vector>

namespace skein {

enum class Status { Pass, Fail };

struct Witness {
  std::string input;
  std::string computed;
  std::string expected;
};

/// Outcome of one verification suite. A FAIL always carries a witness.
struct Report {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Pass;
  std::vector<Witness> witnesses;
  /// Observations that do not affect the status (e.g. known misprints).
  std::vector<std::string> notes;
  std::size_t checks = 0;
  std::size_t failures = 0;

  Report() = default;
  explicit Report(std::string n) : name(std::move(n)) {}
  bool passed() const { return status == Status::Pass; }
  void param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
  /// Counts a check; on failure stores the witness (the first kMaxWitnesses only).
  void check(bool ok, const std::string& input, const std::string& computed,
             const std::string& expected);
  void absorb(const Report& part);

  static constexpr std::size_t kMaxWitnesses = 16;
};

std::string_view status_name(Status s);

/// Nonzero canonical points with F <= bound.
std::vector<BPoint> nonzero_points(std::int64_t bound);
/// Pairs of nonzero points with F(p1) + F(p2) <= bound.
std::vector<std::pair<BPoint, BPoint>> pairs_with_total(std::int64_t bound);

/// theta_(1,0) theta_(0,1) and the reversed product, against the closed forms.
Report verify_hand_products(const ThetaAlgebra& alg);
/// theta_(1,0)^2 = theta_(2,0) + 2 and theta_(1,0) theta_(n,0) = theta_(n+1,0) + theta_(n-1,0).
Report verify_chebyshev_ladder(const ThetaAlgebra& alg, int nmax = 6);
/// The three commutators and the cubic, evaluated with broken-line products.
/// For the one-punctured torus the relations are specialized first.
Report verify_presentation_relations(const ThetaAlgebra& alg);
/// Structure constants agree at twelve endpoints (three per side, both lifts).
Report verify_consistency(const ThetaAlgebra& alg, std::int64_t max_f);
/// (theta_a theta_b) theta_c = theta_a (theta_b theta_c) for all nonzero
/// triples with each F <= max_f; samples > 0 keeps every k-th triple.
Report verify_associativity(const ThetaAlgebra& alg, std::int64_t max_f, std::size_t samples = 0);
/// Every structure constant with F(p1) + F(p2) <= max_f has nonnegative coefficients.
Report verify_positivity(const ThetaAlgebra& alg, std::int64_t max_f);
/// Positivity check on explicit values; label -> polynomial.
Report positivity_report(std::string name, const std::vector<std::pair<std::string, CoeffPoly>>& values);

/// Permutation of R10, R01, R11 induced by M acting on Z^2 / 2Z^2; y fixed.
std::array<int, kMaxVars> psl2_variable_permutation(const Matrix2& M);
Report verify_psl2_equivariance(const ThetaAlgebra& alg, const Matrix2& M,
                                const std::vector<std::pair<BPoint, BPoint>>& pairs);
/// One-punctured torus products at z = 0 against the product-to-sum formula
/// for all nonzero pairs with each F <= max_f.
Report verify_torus_limit(const ThetaAlgebra& s11, std::int64_t max_f);
Report verify_specialization(const ThetaAlgebra& s04, const ThetaAlgebra& s11,
                             const std::vector<std::pair<BPoint, BPoint>>& pairs);
/// Degree-8 lattice identity, its x and x^2 corollaries, and the wall
/// identity as series to `order`.
Report verify_weight_identity(unsigned order = 10);
/// n[p] n[p'] by rewriting equals m[p] m[p'] by broken lines, for all
/// normal monomials with F <= max_f.
Report verify_oracle_equivalence(const ThetaAlgebra& alg, const NcAlgebra& nc, std::int64_t max_f);

Report verify_bar_swap(const ThetaAlgebra& alg, std::int64_t max_f);
Report verify_series_positivity(unsigned order = 12);
Report verify_classical_commutativity(const ThetaAlgebra& alg, std::int64_t max_f);
Report verify_leading_term(const ThetaAlgebra& alg, std::int64_t max_f);
Report verify_trace_bookkeeping(const ThetaAlgebra& alg, std::int64_t max_f);
/// All five property suites above.
Report verify_properties(const ThetaAlgebra& alg, std::int64_t max_f);

}  // namespace skein
