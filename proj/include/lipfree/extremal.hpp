#pragma once
// Classification of molecules as extreme/exposed points of the unit ball,
// with replayable evidence: an exposing function with a strict margin, or
// an explicit convex decomposition through a segment-interior point.

#include <optional>
#include <vector>

#include "lipfree/free_element.hpp"
#include "lipfree/lip_function.hpp"
#include "lipfree/metric_space.hpp"

namespace lipfree {

struct ExposureCertificate {
  PointPair pair;
  LipFunction function;
  // min over all other ordered pairs (u,v) of 1 - <m_uv, function>.
  // Positive exactly when the function exposes the molecule; at finite
  // scale the ball is the convex hull of the molecules, so strict
  // domination over molecules settles exposure.
  Rat margin;
};

struct MoleculeReport {
  PointPair pair;
  std::vector<int> segment_points;
  bool is_trivial_segment = false;
  bool is_extreme = false;
  bool is_exposed = false;
  // Evidence: certificate when exposed, otherwise a two-term convex
  // decomposition through witness_point.
  std::optional<ExposureCertificate> certificate;
  std::optional<Representation> decomposition;
  int witness_point = -1;
};

// min over ordered pairs (u,v) != pair of 1 - pair_quotient(f, u, v).
Rat exposure_margin(const LipFunction& f, PointPair pair);

// Requires segment(pair) == {x, y}; NontrivialSegment otherwise. The
// margin of the returned certificate is asserted positive.
ExposureCertificate exposure_certificate(const SpacePtr& M, PointPair pair);

// Recomputes the margin from the stored function and checks it together
// with lip_norm <= 1 and <m_pair, f> = 1.
bool verify_certificate(const SpacePtr& M, const ExposureCertificate& cert);

// Segment test plus evidence. Trivial segment: exposing certificate.
// Nontrivial: witness z in the segment interior minimizing d(p,z) (ties:
// lowest index) and the decomposition
//   m_pq = d(p,z)/d(p,q) * m_pz + d(z,q)/d(p,q) * m_zq.
MoleculeReport classify_molecule(const SpacePtr& M, PointPair pair);

struct ExtremeDecision {
  bool extreme = false;
  // When not extreme: convex weights over the other molecules.
  std::optional<Representation> combination;
};

// LP feasibility: is m_pq a convex combination of the other molecules?
// Infeasible means vertex of the molecule polytope, hence extreme.
// Independent of the segment criterion; exact rational pivoting.
ExtremeDecision brute_force_extreme(const SpacePtr& M, PointPair pair);

struct MassConcentration {
  bool pass = false;
  Rat tail_mass;
  Rat inner;  // <a, b>
};

// For ||a||_1 = 1, ||b||_inf <= 1 and <a,b> >= 1 - alpha*eps, the mass of
// a on {i : |b_i| <= 1 - alpha} is at most eps. Returns the tail mass and
// the verdict; a failing verdict would falsify the bound. Errors:
// NormViolation when the norm preconditions fail, PreconditionNotMet when
// <a,b> < 1 - alpha*eps.
MassConcentration mass_concentration_check(const std::vector<Rat>& a,
                                           const std::vector<Rat>& b,
                                           const Rat& alpha, const Rat& eps);

struct SplitResult {
  Representation good;  // terms with |<m, f_pq>| > 1 - alpha
  Representation bad;   // the rest
  Rat bad_mass;
};

// Splits a representation of a norm-one element paired to 1 with the
// exposing function of (p, q). Requires the base point to be q, mass(r)
// <= 1/(1 - eps*alpha) and alpha, eps in (0, 1/2). Guarantees: endpoints
// of good terms lie in the alpha-segment of (p, q) and bad_mass <= 2*eps.
SplitResult split_representation(const SpacePtr& M, int p, int q,
                                 const Representation& r, const Rat& alpha,
                                 const Rat& eps);

// Convenience: split the optimal representation returned by primal_norm
// for the molecule over (p, q).
SplitResult split_optimal(const SpacePtr& M, int p, int q, const Rat& alpha,
                          const Rat& eps);

}  // namespace lipfree
