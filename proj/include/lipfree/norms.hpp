#pragma once
// The free-space norm computed by two independent routes: a linear program
// over the Lipschitz unit ball (dual) and a min-cost transport flow
// (primal). Exactness means the two must agree on every element.

#include <vector>

#include "lipfree/free_element.hpp"
#include "lipfree/lip_function.hpp"

namespace lipfree {

struct DualNorm {
  Rat value;
  LipFunction witness;  // attains <mu, f> = value with lip_norm(f) <= 1
};

// max <mu, f> over f with f(base) = 0 and |f(x)-f(y)| <= d(x,y) for all
// pairs, solved by exact simplex.
DualNorm dual_norm_with_witness(const FreeElement& mu);
Rat dual_norm(const FreeElement& mu);

struct PrimalNorm {
  Rat value;
  Representation representation;  // optimal; mass() == value
};

// Cheapest molecule representation of mu: ship the positive coefficient
// mass to the negative (the base acts as the slack node) at cost d(x,y),
// by successive shortest augmenting paths. Terms come out sorted by pair.
PrimalNorm primal_norm(const FreeElement& mu);

struct SubspaceDistance {
  Rat value;
  LipFunction witness;  // vanishes on the subset, lip_norm <= 1
};

// inf over nu supported in `subset` of ||mu - nu||, as a single LP: the
// norm maximization restricted to functions vanishing on the subset.
// `subset` must contain the base point.
SubspaceDistance dist_to_subspace(const FreeElement& mu,
                                  const std::vector<int>& subset);

}  // namespace lipfree
