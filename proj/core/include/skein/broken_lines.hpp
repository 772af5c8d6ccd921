#pragma once

#include "skein/algebra_element.hpp"
#include "skein/scattering.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace skein {

/// Coefficient of x^ell in prod_{j=0}^{N-1} sum_k c_k A^{2mu k (2j - N + 1)} x^k.
/// Throws std::invalid_argument if ell exceeds the series order.
CoeffPoly bend_factor(const RaySeries& series, unsigned N, unsigned ell, int twice_mu);

struct BendEvent {
  RationalPoint point;
  BPoint ray;
  LiftVec lift;
  unsigned ell = 0;
  unsigned N = 0;
  CoeffPoly factor;
};

/// One broken line, events listed in the direction of travel.
struct BrokenLineTrace {
  BPoint charge;
  RationalPoint endpoint;
  LiftVec initial_exponent;
  std::vector<BendEvent> events;
  LiftVec final_exponent;
  CoeffPoly coefficient;
};

/// Checks the exponent and coefficient bookkeeping of a trace.
bool trace_is_consistent(const BrokenLineTrace& t);

/// Broken-line engine for one diagram. Products and partial broken-line sums
/// are memoized; all public members are safe to call concurrently.
class ThetaAlgebra {
 public:
  explicit ThetaAlgebra(DiagramConfig cfg);

  const DiagramConfig& config() const { return diagram_.config(); }
  Ring ring() const { return config().ring; }
  const ScatteringDiagram& diagram() const { return diagram_; }

  /// Caps the worker threads used by product(); 0 means one per hardware thread.
  void set_threads(unsigned n) { threads_ = n; }
  unsigned threads() const;

  CoeffPoly bend(BPoint dir, unsigned N, unsigned ell) const;

  /// Sum of c(gamma) over broken lines of the given charge ending at Q with
  /// final exponent s.
  CoeffPoly final_coefficient(BPoint charge, const RationalPoint& Q, LiftVec s) const;

  /// All broken lines of the given charge ending at Q with bend cost <= budget.
  /// Throws if Q lies on a line of F-value <= budget.
  std::vector<BrokenLineTrace> enumerate(BPoint charge, const RationalPoint& Q,
                                         std::int64_t budget) const;

  /// Structure constant at an explicit endpoint. Throws std::invalid_argument
  /// when Q is not admissible for p.
  CoeffPoly structure_constant(BPoint p1, BPoint p2, BPoint p, const RationalPoint& Q) const;
  /// Default endpoint for (p1, p2, p): inside the sector next to the ray
  /// through p on the given side, avoiding every line that can carry a bend.
  RationalPoint endpoint(BPoint p1, BPoint p2, BPoint p, Side side = Side::Left) const;
  /// Structure constant at the default endpoint on the given side.
  CoeffPoly structure_constant(BPoint p1, BPoint p2, BPoint p, Side side = Side::Left) const;

  AlgebraElement product(BPoint p1, BPoint p2) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

 private:
  // (charge, primitive start direction, exponent, remaining budget)
  using WalkKey = std::tuple<BPoint, LiftVec, LiftVec, std::int64_t>;
  using SideKey = std::tuple<std::int64_t, BPoint, Side>;

  std::shared_ptr<const std::vector<BPoint>> lines_up_to(std::int64_t bound) const;
  std::vector<BPoint> relevant(std::int64_t budget) const;
  CoeffPoly walk(BPoint charge, LiftVec P, LiftVec p, std::int64_t remaining,
                 const std::vector<BPoint>& all_lines) const;
  void walk_traces(BPoint charge, const RationalPoint& X, LiftVec p, std::int64_t remaining,
                   const CoeffPoly& coeff, const std::vector<BPoint>& all_lines,
                   std::vector<BendEvent>& events, BrokenLineTrace& proto,
                   std::vector<BrokenLineTrace>& out) const;

  ScatteringDiagram diagram_;
  unsigned threads_ = 0;

  mutable std::mutex mutex_;
  mutable std::shared_ptr<const std::vector<BPoint>> lines_;
  mutable std::int64_t lines_bound_ = -1;
  mutable std::map<std::tuple<BPoint, unsigned, unsigned>, CoeffPoly> bend_cache_;
  mutable std::map<WalkKey, CoeffPoly> walk_cache_;
  mutable std::map<SideKey, RationalPoint> basepoint_cache_;
  mutable std::map<std::pair<BPoint, BPoint>, AlgebraElement> product_cache_;
};

/// Free-function forms that build a throwaway engine.
std::vector<BrokenLineTrace> enumerate_broken_lines(const DiagramConfig& cfg, BPoint charge,
                                                    const RationalPoint& Q, std::int64_t budget);
CoeffPoly structure_constant(const DiagramConfig& cfg, BPoint p1, BPoint p2, BPoint p,
                             const RationalPoint& Q);
AlgebraElement product_theta(const DiagramConfig& cfg, BPoint p1, BPoint p2);
AlgebraElement element_product(const DiagramConfig& cfg, const AlgebraElement& a, const AlgebraElement& b);

/// Lift of p whose inner product with Q is positive (zero for p = 0).
LiftVec lift_towards(BPoint p, const RationalPoint& Q);

}  // namespace skein
