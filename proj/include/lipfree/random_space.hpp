#pragma once
// Seeded generators for valid metric spaces. Identical (n, profile, seed)
// always produce the identical space.

#include <cstdint>
#include <random>
#include <string_view>

#include "lipfree/metric_space.hpp"

namespace lipfree {

enum class Profile {
  // Points on a rational grid, exact l1 distances.
  Euclidean,
  // Random weighted graph, distances by shortest-path closure. Produces
  // nontrivial segments with high frequency.
  ShortestPath,
  // Random symmetric matrix repaired by metric closure. Mostly trivial
  // segments.
  Generic,
};

Profile parse_profile(std::string_view name);  // BadProfile
const char* to_string(Profile profile);

SpacePtr random_space(int n, Profile profile, std::uint64_t seed);
SpacePtr random_space(int n, std::string_view profile, std::uint64_t seed);

// Uniform draw in [0, bound) by rejection; identical on every platform,
// unlike std::uniform_int_distribution.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace lipfree
