#pragma once
// Seeded property suites: the guarantees behind the public operations are
// re-checked over a corpus of random spaces, exactly. A nonzero failure
// count means a falsified invariant, not a flaky run.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lipfree/free_element.hpp"
#include "lipfree/metric_space.hpp"
#include "lipfree/rational.hpp"

namespace lipfree {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int count = 100;  // spaces in the corpus
  int min_n = 3;
  int max_n = 10;
  Rat alpha = Rat(1, 4);
  Rat eps = Rat(1, 4);
  int threads = 0;  // 0: hardware concurrency
};

struct CheckStat {
  std::string name;
  long long checked = 0;
  long long failed = 0;
};

struct SuiteReport {
  std::vector<CheckStat> checks;
  std::vector<std::string> failures;  // first few, for diagnostics
  bool all_pass() const;
  long long total_checked() const;
};

// Profiles cycle euclidean, shortest_path, generic; sizes sweep
// min_n..max_n. Space i is seeded with seed + i, so corpora with the
// same parameters are identical across runs and platforms.
std::vector<SpacePtr> corpus(std::uint64_t seed, int count, int min_n,
                             int max_n);

// Small rational coefficients, roughly half of them zero. May return the
// zero element.
FreeElement random_element(const SpacePtr& M, std::mt19937_64& rng);

// A representation of m_pq padded with a cancelling reversed pair and a
// cancelling triangle loop, with total mass exactly 1/(1 - eps*alpha):
// the extreme input the splitting bound still has to absorb. Requires
// base(M) == q and size >= 3.
Representation padded_molecule_representation(const SpacePtr& M, int p, int q,
                                              const Rat& alpha, const Rat& eps,
                                              std::mt19937_64& rng);

SuiteReport run_suite(const SuiteConfig& config);

// Runs fn(0..count-1) on a fixed-size worker pool. Rethrows the
// lowest-index exception after all workers finish.
void parallel_for_index(int count, int threads,
                        const std::function<void(int)>& fn);

}  // namespace lipfree
