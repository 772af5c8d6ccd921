#pragma once

#include "skein/affine_base.hpp"
#include "skein/series.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

namespace skein {

enum class Surface { S04, S11 };

/// Which closed form drives the four-punctured sphere walls. `Product` is the
/// eight-fold product over the vector-multiplet denominator; `ClosedForm`
/// is F(r, s, y, x) with s the product of the two other R variables. The two
/// agree up to x^3 and differ at x^4.
enum class WallForm { Product, ClosedForm };

std::string_view surface_name(Surface s);
/// Parses "s04" / "s11"; throws std::invalid_argument otherwise.
Surface parse_surface(std::string_view name);

/// Hook for building deliberately defective diagrams in verification tests.
using WallPerturbation = std::function<RaySeries(BPoint dir, const RaySeries& series)>;

struct DiagramConfig {
  Surface surface = Surface::S04;
  int twice_mu = 2;
  Ring ring = Ring::S04;
  WallForm wall = WallForm::Product;
  WallPerturbation perturbation;

  static DiagramConfig s04(WallForm wall = WallForm::Product);
  static DiagramConfig s11();
  static DiagramConfig for_surface(Surface s);
};

/// Unperturbed wall series for a primitive direction. Throws on a
/// non-primitive or zero direction.
RaySeries ray_series(const DiagramConfig& cfg, BPoint dir, unsigned order);

/// Primitive directions d with F(d) <= F(p1) + F(p2) - F(p).
std::vector<BPoint> relevant_rays(const BPoint& p1, const BPoint& p2, const BPoint& p);

enum class Side { Left, Right };

/// Admissible endpoints adjacent to R_{>=0} target: points strictly inside the
/// sector of the arrangement {lines} + {x=0, y=0, x+y=0} that touches the
/// target direction on the requested side (counterclockwise is Left).
/// Returns three distinct points of that sector. A zero target uses
/// `default_direction`.
std::vector<RationalPoint> basepoint_candidates(LiftVec target, const std::vector<BPoint>& lines,
                                                Side side);
RationalPoint choose_basepoint(LiftVec target, const std::vector<BPoint>& lines, Side side);

/// Direction used to pick a sector when the target is the origin.
inline constexpr LiftVec kDefaultDirection{1, 0};

/// True if Q lies on none of the lines nor on x = 0, y = 0, x + y = 0.
bool is_generic(const RationalPoint& Q, const std::vector<BPoint>& lines);

/// True if Q lies on none of the lines and no line separates Q from the
/// target direction.
bool is_admissible(const RationalPoint& Q, LiftVec target, const std::vector<BPoint>& lines);

/// A diagram with memoized wall series.
class ScatteringDiagram {
 public:
  explicit ScatteringDiagram(DiagramConfig cfg);

  const DiagramConfig& config() const { return cfg_; }
  /// Wall series for `dir` to at least `order`, including any perturbation.
  std::shared_ptr<const RaySeries> series(BPoint dir, unsigned order) const;
  /// Key grouping directions that share a wall series.
  int wall_class(BPoint dir) const;

 private:
  DiagramConfig cfg_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<BPoint, unsigned>, std::shared_ptr<const RaySeries>> cache_;
};

}  // namespace skein
