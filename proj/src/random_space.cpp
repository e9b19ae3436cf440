#include "lipfree/random_space.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lipfree/error.hpp"

namespace lipfree {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

// All-pairs shortest paths; exact. Input must be symmetric with zero
// diagonal and positive finite off-diagonal entries.
void metric_closure(std::vector<std::vector<Rat>>& d) {
  const int n = static_cast<int>(d.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
}

SpacePtr euclidean_profile(int n, std::mt19937_64& rng) {
  // Grid points with half-integer coordinates in a box wide enough to make
  // collisions rare; resample on collision.
  const std::uint64_t side = 8u * static_cast<unsigned>(n) + 1;
  std::set<std::pair<std::uint64_t, std::uint64_t>> used;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
  while (static_cast<int>(pts.size()) < n) {
    auto p = std::make_pair(rand_below(rng, side), rand_below(rng, side));
    if (used.insert(p).second) pts.push_back(p);
  }
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat dx = Rat(BigInt(pts[i].first)) - Rat(BigInt(pts[j].first));
      Rat dy = Rat(BigInt(pts[i].second)) - Rat(BigInt(pts[j].second));
      d[i][j] = (rat_abs(dx) + rat_abs(dy)) / 2;
    }
  return FiniteMetricSpace::validate(default_labels(n), 0, std::move(d));
}

SpacePtr shortest_path_profile(int n, std::mt19937_64& rng) {
  // Random spanning tree plus extra edges, integer weights, then closure.
  const Rat inf(1000000);
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  auto connect = [&](int i, int j, Rat w) {
    if (w < d[i][j]) d[i][j] = d[j][i] = std::move(w);
  };
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rand_below(rng, i));
    connect(i, parent, Rat(1 + static_cast<int>(rand_below(rng, 8))));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rand_below(rng, 4) == 0)
        connect(i, j, Rat(1 + static_cast<int>(rand_below(rng, 8))));
  metric_closure(d);
  return FiniteMetricSpace::validate(default_labels(n), 0, std::move(d));
}

SpacePtr generic_profile(int n, std::mt19937_64& rng) {
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat w(1 + static_cast<int>(rand_below(rng, 40)),
            1 + static_cast<int>(rand_below(rng, 8)));
      d[i][j] = d[j][i] = w;
    }
  metric_closure(d);
  return FiniteMetricSpace::validate(default_labels(n), 0, std::move(d));
}

}  // namespace

Profile parse_profile(std::string_view name) {
  if (name == "euclidean") return Profile::Euclidean;
  if (name == "shortest_path") return Profile::ShortestPath;
  if (name == "generic") return Profile::Generic;
  throw Error(ErrorKind::BadProfile,
              "unknown profile '" + std::string(name) +
                  "' (euclidean, shortest_path, generic)");
}

const char* to_string(Profile profile) {
  switch (profile) {
    case Profile::Euclidean: return "euclidean";
    case Profile::ShortestPath: return "shortest_path";
    case Profile::Generic: return "generic";
  }
  return "?";
}

SpacePtr random_space(int n, Profile profile, std::uint64_t seed) {
  if (n < 2)
    throw Error(ErrorKind::PreconditionNotMet, "random_space needs n >= 2");
  std::mt19937_64 rng(seed);
  switch (profile) {
    case Profile::Euclidean: return euclidean_profile(n, rng);
    case Profile::ShortestPath: return shortest_path_profile(n, rng);
    case Profile::Generic: return generic_profile(n, rng);
  }
  throw Error(ErrorKind::BadProfile, "unhandled profile");
}

SpacePtr random_space(int n, std::string_view profile, std::uint64_t seed) {
  return random_space(n, parse_profile(profile), seed);
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::PreconditionNotMet, "empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace lipfree
