#pragma once
// Elements of the free space over a finite pointed metric space, in
// canonical coefficient form, plus weighted molecule representations.

#include <vector>

#include "lipfree/lip_function.hpp"
#include "lipfree/metric_space.hpp"
#include "lipfree/rational.hpp"

namespace lipfree {

struct RepresentationTerm {
  Rat weight;  // nonzero
  PointPair pair;
};

// Weighted list of molecules; maps onto a free-space element by summing
// weight * m_xy. Representations of an element are not unique.
struct Representation {
  std::vector<RepresentationTerm> terms;

  Rat mass() const;  // sum of |weight|
};

// Canonical form: one rational coefficient per point, with the coefficient
// of the base identically zero (the Dirac at the base is the zero element).
class FreeElement {
 public:
  static FreeElement zero(SpacePtr space);
  static FreeElement dirac(SpacePtr space, int x);
  // (dirac(x) - dirac(y)) / d(x,y); always norm one.
  static FreeElement molecule(SpacePtr space, PointPair pair);

  // Full-length coefficient vector; the base entry is forced to zero.
  FreeElement(SpacePtr space, std::vector<Rat> coeffs);

  const SpacePtr& space() const { return space_; }
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  std::vector<int> support() const;  // nonzero indices; never the base

  // <mu, f> = sum coeff(x) * f(x). SpaceMismatch if spaces differ.
  Rat pairing(const LipFunction& f) const;

  FreeElement operator+(const FreeElement& other) const;
  FreeElement operator-(const FreeElement& other) const;
  FreeElement scaled(const Rat& factor) const;
  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return same_space(a.space_, b.space_) && a.coeffs_ == b.coeffs_;
  }

 private:
  SpacePtr space_;
  std::vector<Rat> coeffs_;
};

// Sum of weight * molecule(pair) over the terms, in canonical form.
FreeElement from_representation(const SpacePtr& M, const Representation& r);

// The element under the canonical isometry onto the space with a new base
// point. Norm-preserving; molecules map to molecules with the same pair.
FreeElement rebase(const FreeElement& mu, int new_base);

}  // namespace lipfree
