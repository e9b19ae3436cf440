#include "lipfree/metric_space.hpp"

#include <algorithm>
#include <unordered_set>

#include "lipfree/error.hpp"

namespace lipfree {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> points, int base,
                                     std::vector<Rat> flat)
    : points_(std::move(points)), base_(base), d_(std::move(flat)) {}

SpacePtr FiniteMetricSpace::validate(std::vector<std::string> points,
                                     int base_index,
                                     std::vector<std::vector<Rat>> dist) {
  const int n = static_cast<int>(points.size());
  if (n < 1)
    throw Error(ErrorKind::ParseError, "a space needs at least one point");
  if (base_index < 0 || base_index >= n)
    throw Error(ErrorKind::IndexOutOfRange,
                "base index " + std::to_string(base_index) + " for " +
                    std::to_string(n) + " points",
                base_index);
  if (static_cast<int>(dist.size()) != n)
    throw Error(ErrorKind::ParseError, "distance matrix is not n x n");
  for (const auto& row : dist)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::ParseError, "distance matrix is not n x n");

  {
    std::unordered_set<std::string> seen;
    for (int i = 0; i < n; ++i)
      if (!seen.insert(points[i]).second)
        throw Error(ErrorKind::DuplicatePoint,
                    "point label '" + points[i] + "' repeats", i);
  }

  for (int i = 0; i < n; ++i)
    if (dist[i][i] != 0)
      throw Error(ErrorKind::NonzeroDiagonal,
                  "d(" + std::to_string(i) + "," + std::to_string(i) +
                      ") = " + format_rational(dist[i][i]),
                  i, i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist[i][j] != dist[j][i])
        throw Error(ErrorKind::AsymmetricMatrix,
                    "d(" + std::to_string(i) + "," + std::to_string(j) +
                        ") != d(" + std::to_string(j) + "," +
                        std::to_string(i) + ")",
                    i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist[i][j] <= 0)
        throw Error(ErrorKind::NegativeOrZeroOffDiagonal,
                    "d(" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + format_rational(dist[i][j]),
                    i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (dist[i][j] > dist[i][k] + dist[k][j])
          throw Error(ErrorKind::TriangleViolation,
                      "d(" + std::to_string(i) + "," + std::to_string(j) +
                          ") > d(" + std::to_string(i) + "," +
                          std::to_string(k) + ") + d(" + std::to_string(k) +
                          "," + std::to_string(j) + ")",
                      i, j, k);
      }
    }

  std::vector<Rat> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (auto& row : dist)
    for (auto& q : row) flat.push_back(std::move(q));
  return SpacePtr(
      new FiniteMetricSpace(std::move(points), base_index, std::move(flat)));
}

const std::string& FiniteMetricSpace::label(int i) const {
  check_point(*this, i);
  return points_[i];
}

int FiniteMetricSpace::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (points_[i] == label) return i;
  throw Error(ErrorKind::UnknownPoint,
              "no point labelled '" + std::string(label) + "'");
}

const Rat& FiniteMetricSpace::dist(int i, int j) const {
  check_point(*this, i);
  check_point(*this, j);
  return d_[static_cast<size_t>(i) * size() + j];
}

std::vector<int> FiniteMetricSpace::segment(int x, int y) const {
  check_pair(*this, x, y);
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (dist(z, x) + dist(z, y) == dist(x, y)) out.push_back(z);
  return out;
}

std::vector<int> FiniteMetricSpace::epsilon_segment(int p, int q,
                                                    const Rat& eps) const {
  check_pair(*this, p, q);
  if (eps <= 0 || eps >= 1)
    throw Error(ErrorKind::EpsOutOfRange,
                "eps = " + format_rational(eps) + " not in (0,1)");
  const Rat threshold = dist(p, q) / (Rat(1) - eps);
  std::vector<int> out;
  for (int t = 0; t < size(); ++t)
    if (dist(p, t) + dist(t, q) <= threshold) out.push_back(t);
  return out;
}

bool FiniteMetricSpace::operator==(const FiniteMetricSpace& other) const {
  return base_ == other.base_ && points_ == other.points_ && d_ == other.d_;
}

SpacePtr rebased(const SpacePtr& space, int new_base) {
  check_point(*space, new_base);
  if (new_base == space->base()) return space;
  const int n = space->size();
  std::vector<std::string> points;
  points.reserve(n);
  std::vector<std::vector<Rat>> dist(n);
  for (int i = 0; i < n; ++i) {
    points.push_back(space->label(i));
    dist[i].reserve(n);
    for (int j = 0; j < n; ++j) dist[i].push_back(space->dist(i, j));
  }
  return FiniteMetricSpace::validate(std::move(points), new_base,
                                     std::move(dist));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void check_point(const FiniteMetricSpace& M, int i) {
  if (i < 0 || i >= M.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "point index " + std::to_string(i) + " for n = " +
                    std::to_string(M.size()),
                i);
}

void check_pair(const FiniteMetricSpace& M, int x, int y) {
  check_point(M, x);
  check_point(M, y);
  if (x == y)
    throw Error(ErrorKind::SamePoint,
                "pair (" + std::to_string(x) + "," + std::to_string(y) + ")",
                x, y);
}

}  // namespace lipfree
