#pragma once
// Elements of Lip_0(M): rational-valued functions vanishing at the base
// point, with exact Lipschitz norms.

#include <vector>

#include "lipfree/metric_space.hpp"
#include "lipfree/rational.hpp"

namespace lipfree {

class LipFunction {
 public:
  // values indexed by points; values[base] must be 0.
  LipFunction(SpacePtr space, std::vector<Rat> values);

  const SpacePtr& space() const { return space_; }
  const Rat& value(int i) const;
  const std::vector<Rat>& values() const { return values_; }

  // Best Lipschitz constant: max over pairs of |f(x)-f(y)| / d(x,y).
  // Scans every pair. SingletonSpace when n < 2.
  Rat lip_norm() const;

  // (f(u) - f(v)) / d(u,v), signed. SamePoint when u = v.
  Rat pair_quotient(int u, int v) const;

  friend bool operator==(const LipFunction& a, const LipFunction& b) {
    return same_space(a.space_, b.space_) && a.values_ == b.values_;
  }

 private:
  SpacePtr space_;
  std::vector<Rat> values_;
};

// The exposing function of the molecule over (p, q):
//
//   f(t) = d(p,q)/2 * ( (d(t,q) - d(t,p)) / (d(t,q) + d(t,p)) - c )
//
// where the constant c is the value the first fraction takes at the base
// point, so that f(base) = 0. Satisfies lip_norm(f) <= 1 and
// pair_quotient(f, p, q) = 1.
LipFunction magic_function(const SpacePtr& M, int p, int q);

}  // namespace lipfree
