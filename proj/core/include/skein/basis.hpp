#pragma once

#include "skein/broken_lines.hpp"
#include "skein/normal_form.hpp"

#include <map>
#include <mutex>

namespace skein {

/// Change of basis between theta functions and the monomials
/// m[p] = theta_{v_j}^a theta_{v_{j+1}}^b, by triangular elimination in F.
class MonomialBasis {
 public:
  explicit MonomialBasis(const ThetaAlgebra& algebra) : alg_(algebra) {}

  const ThetaAlgebra& algebra() const { return alg_; }
  Ring ring() const { return alg_.ring(); }

  /// m[w] expanded in theta functions.
  AlgebraElement monomial(const NormalMonomial& w) const;
  AlgebraElement monomials_to_theta(const NormalElement& nf) const;
  NormalElement theta_to_monomials(BPoint p) const;
  NormalElement theta_to_monomials(const AlgebraElement& e) const;

 private:
  const ThetaAlgebra& alg_;
  mutable std::mutex mutex_;
  mutable std::map<NormalMonomial, AlgebraElement> monomials_;
  mutable std::map<BPoint, NormalElement> thetas_;
};

NormalElement theta_to_monomials(const DiagramConfig& cfg, BPoint p);
AlgebraElement monomials_to_theta(const DiagramConfig& cfg, const NormalElement& nf);

}  // namespace skein
