#pragma once
// Finite pointed metric spaces with exact rational distances, their
// validation, metric segments and eps-segments.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lipfree/rational.hpp"

namespace lipfree {

// Ordered pair of distinct point indices.
struct PointPair {
  int x = 0;
  int y = 0;
  friend bool operator==(const PointPair&, const PointPair&) = default;
};

class FiniteMetricSpace;
using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

// Immutable after validation; safe for unrestricted concurrent reads.
class FiniteMetricSpace {
 public:
  // Checks every metric axiom and throws a structured Error naming the
  // violated one with witness indices: DuplicatePoint, NonzeroDiagonal,
  // AsymmetricMatrix, NegativeOrZeroOffDiagonal, TriangleViolation(i,j,k).
  static SpacePtr validate(std::vector<std::string> points, int base_index,
                           std::vector<std::vector<Rat>> dist);

  int size() const { return static_cast<int>(points_.size()); }
  int base() const { return base_; }
  const std::string& label(int i) const;
  int index_of(std::string_view label) const;  // UnknownPoint if absent
  const Rat& dist(int i, int j) const;

  // {z : d(z,x) + d(z,y) = d(x,y)}, exact equality. Contains x and y.
  std::vector<int> segment(int x, int y) const;

  // {t : d(p,t) + d(t,q) <= d(p,q) / (1 - eps)}, exact comparison.
  // Requires 0 < eps < 1.
  std::vector<int> epsilon_segment(int p, int q, const Rat& eps) const;

  bool operator==(const FiniteMetricSpace& other) const;

 private:
  FiniteMetricSpace(std::vector<std::string> points, int base,
                    std::vector<Rat> flat);

  std::vector<std::string> points_;
  int base_;
  std::vector<Rat> d_;  // row-major n*n
};

// Same points and distances, new distinguished point.
SpacePtr rebased(const SpacePtr& space, int new_base);

bool same_space(const SpacePtr& a, const SpacePtr& b);

// IndexOutOfRange unless 0 <= i < M.size().
void check_point(const FiniteMetricSpace& M, int i);

// SamePoint unless x != y (both in range).
void check_pair(const FiniteMetricSpace& M, int x, int y);

}  // namespace lipfree
