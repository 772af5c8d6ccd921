// Acceptance run: one PASS/FAIL line per criterion. Sizes and wall-clock
// limits are fixed here; a criterion passes only if every report it runs
// passes and the whole criterion finishes within its limit.

#include "skein/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace skein;

namespace {

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<std::vector<Report>()> run;
  // Extra precondition on the inputs, e.g. a minimum number of sampled pairs.
  std::function<bool()> precondition = [] { return true; };
};

Report with_pairs(Report r, std::size_t n) {
  r.param("pairs", std::to_string(n));
  return r;
}

bool run_one(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const bool pre = c.precondition();
  const std::vector<Report> reports = pre ? c.run() : std::vector<Report>{};
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool ok = pre && secs <= c.limit_seconds;
  std::size_t checks = 0;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    checks += r.checks;
  }
  std::printf("%s %2d %-18s (%.2fs, limit %.0fs, %zu checks)\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(), secs,
              c.limit_seconds, checks);
  if (!pre) std::printf("    precondition on the input set not met\n");
  if (secs > c.limit_seconds) std::printf("    time limit exceeded\n");
  for (const auto& r : reports) {
    if (r.passed()) continue;
    std::printf("    %s: %zu of %zu checks failed\n", r.name.c_str(), r.failures, r.checks);
    for (const auto& w : r.witnesses)
      std::printf("      %s\n        computed %s\n        expected %s\n", w.input.c_str(), w.computed.substr(0, 400).c_str(),
                  w.expected.substr(0, 400).c_str());
  }
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  const auto s04 = [] { return ThetaAlgebra(DiagramConfig::s04()); };
  const auto s11 = [] { return ThetaAlgebra(DiagramConfig::s11()); };

  const auto spec_pairs = pairs_with_total(6);
  const auto psl2_pairs = pairs_with_total(5);

  const std::vector<Criterion> criteria{
      {1, "hand-products", 1, [&] { return std::vector{verify_hand_products(s04())}; }},
      {2, "chebyshev-ladder", 1,
       [&] { return std::vector{verify_chebyshev_ladder(s04(), 6), verify_chebyshev_ladder(s11(), 6)}; }},
      {3, "presentation", 10,
       [&] { return std::vector{verify_presentation_relations(s04()), verify_presentation_relations(s11())}; }},
      {4, "consistency", 120, [&] { return std::vector{verify_consistency(s04(), 6)}; }},
      {5, "associativity", 300,
       [&] { return std::vector{verify_associativity(s04(), 3), verify_associativity(s11(), 4)}; }},
      {6, "positivity", 120, [&] { return std::vector{verify_positivity(s04(), 6), verify_positivity(s11(), 8)}; }},
      {7, "torus-limit", 60, [&] { return std::vector{verify_torus_limit(s11(), 5)}; }},
      {8, "specialization", 120,
       [&] { return std::vector{with_pairs(verify_specialization(s04(), s11(), spec_pairs), spec_pairs.size())}; },
       [&] { return spec_pairs.size() >= 20; }},
      {9, "psl2", 120,
       [&] {
         const auto alg = s04();
         return std::vector{with_pairs(verify_psl2_equivariance(alg, Matrix2::S(), psl2_pairs), psl2_pairs.size()),
                            with_pairs(verify_psl2_equivariance(alg, Matrix2::T(), psl2_pairs), psl2_pairs.size())};
       },
       [&] { return psl2_pairs.size() >= 20; }},
      {10, "weight-identity", 10, [&] { return std::vector{verify_weight_identity(10)}; }},
      {11, "oracle", 300,
       [&] {
         const NcAlgebra nc04(Presentation::s04()), nc11(Presentation::s11());
         return std::vector{verify_oracle_equivalence(s04(), nc04, 4), verify_oracle_equivalence(s11(), nc11, 5)};
       }},
      {12, "properties", 120, [&] { return std::vector{verify_properties(s04(), 5), verify_properties(s11(), 5)}; }},
  };

  int failed = 0;
  for (const auto& c : criteria) failed += run_one(c) ? 0 : 1;
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
