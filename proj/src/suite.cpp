#include "lipfree/suite.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>
#include <utility>

#include "lipfree/error.hpp"
#include "lipfree/extremal.hpp"
#include "lipfree/lip_function.hpp"
#include "lipfree/norms.hpp"
#include "lipfree/random_space.hpp"

namespace lipfree {

namespace {

constexpr int kFamilies = 6;
constexpr const char* kFamilyNames[kFamilies] = {
    "magic_function",   "segment_recovery",     "duality_gap",
    "mass_concentration", "split_representation", "intersection_shadow",
};
constexpr std::size_t kMaxFailures = 10;

constexpr Profile kProfiles[] = {Profile::Euclidean, Profile::ShortestPath,
                                 Profile::Generic};

struct SpaceOutcome {
  std::array<long long, kFamilies> checked{};
  std::array<long long, kFamilies> failed{};
  std::vector<std::string> failures;
};

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvariantViolated, what);
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool support_inside(const FreeElement& mu, const std::vector<int>& subset) {
  for (int x : mu.support())
    if (!contains(subset, x)) return false;
  return true;
}

FreeElement restrict_to(const FreeElement& mu, const std::vector<int>& subset) {
  std::vector<Rat> coeffs = mu.coeffs();
  for (int x = 0; x < mu.space()->size(); ++x)
    if (!contains(subset, x)) coeffs[x] = 0;
  return FreeElement(mu.space(), std::move(coeffs));
}

std::vector<int> random_subset(const FiniteMetricSpace& M,
                               std::mt19937_64& rng) {
  std::vector<int> subset;
  for (int x = 0; x < M.size(); ++x)
    if (x == M.base() || rand_below(rng, 2) == 1) subset.push_back(x);
  return subset;
}

std::vector<int> intersect(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

int random_point_except(std::mt19937_64& rng, int n, int avoid) {
  return static_cast<int>((avoid + 1 + rand_below(rng, n - 1)) % n);
}

// One attempt = one lemma instance; any throw inside counts as a failure.
class Attempts {
 public:
  Attempts(SpaceOutcome& out, std::string where)
      : out_(out), where_(std::move(where)) {}

  template <typename Body>
  void run(int family, const char* what, Body&& body) {
    ++out_.checked[family];
    try {
      body();
    } catch (const std::exception& e) {
      ++out_.failed[family];
      if (out_.failures.size() < kMaxFailures)
        out_.failures.push_back(where_ + ": " + what + ": " + e.what());
    }
  }

 private:
  SpaceOutcome& out_;
  std::string where_;
};

void check_split(const SpacePtr& Mq, PointPair pair, const SplitResult& split,
                 const Rat& eps) {
  const Rat two_eps = 2 * eps;
  require(split.bad_mass <= two_eps, "bad mass above 2*eps");
  const FreeElement good = from_representation(Mq, split.good);
  const FreeElement bad = from_representation(Mq, split.bad);
  const FreeElement mol = FreeElement::molecule(Mq, pair);
  require(good + bad == mol, "split does not reassemble the molecule");
  require(dual_norm(mol - good) <= two_eps,
          "good part farther from the molecule than 2*eps");
}

void run_space(const SuiteConfig& cfg, int index, const SpacePtr& M,
               SpaceOutcome& out) {
  const int n = M->size();
  std::mt19937_64 rng(cfg.seed ^
                      (0x9E3779B97F4A7C15ULL *
                       static_cast<std::uint64_t>(index + 1)));
  Attempts attempts(out, "space " + std::to_string(index) + " (" +
                             to_string(kProfiles[index % 3]) + ", n=" +
                             std::to_string(n) + ")");

  static const Rat kEpsSamples[] = {Rat(1, 10), Rat(1, 8), Rat(1, 4),
                                    Rat(1, 3), Rat(1, 2)};

  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      const LipFunction f = magic_function(M, p, q);
      const std::vector<int> segment = M->segment(p, q);

      attempts.run(0, "exposing function basics", [&] {
        require(f.value(M->base()) == 0, "nonzero at the base point");
        require(f.lip_norm() <= 1, "Lipschitz norm above one");
        require(f.pair_quotient(p, q) == 1, "quotient at (p,q) not one");
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (f.pair_quotient(u, v) == 1)
              require(contains(segment, u) && contains(segment, v),
                      "unit quotient outside the metric segment");
          }
      });

      for (const Rat& eps : kEpsSamples) {
        attempts.run(1, "near-unit quotients land in the eps-segment", [&] {
          const std::vector<int> eps_segment = M->epsilon_segment(p, q, eps);
          const Rat threshold = Rat(1) - eps;
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
              if (u == v) continue;
              if (f.pair_quotient(u, v) > threshold)
                require(contains(eps_segment, u) && contains(eps_segment, v),
                        "endpoint escapes the eps-segment");
            }
        });
      }
    }
  }

  for (int round = 0; round < 3; ++round) {
    const FreeElement mu = random_element(M, rng);
    attempts.run(2, "primal/dual agreement on a random element", [&] {
      const PrimalNorm primal = primal_norm(mu);
      const DualNorm dual = dual_norm_with_witness(mu);
      require(primal.value == dual.value, "primal and dual norms disagree");
      require(primal.representation.mass() == primal.value,
              "optimal representation mass differs from the norm");
      require(from_representation(M, primal.representation) == mu,
              "optimal representation does not reproduce the element");
      require(dual.witness.lip_norm() <= 1, "witness outside the unit ball");
      require(mu.pairing(dual.witness) == dual.value,
              "witness does not attain the norm");
    });
  }
  {
    const int p = static_cast<int>(rand_below(rng, n));
    const int q = random_point_except(rng, n, p);
    attempts.run(2, "molecules have norm one", [&] {
      const FreeElement m = FreeElement::molecule(M, {p, q});
      require(dual_norm(m) == 1, "dual norm of a molecule is not one");
      require(primal_norm(m).value == 1, "primal norm of a molecule is not one");
    });
  }

  for (int t = 0; t < 20; ++t) {
    const int k = 2 + static_cast<int>(rand_below(rng, 7));
    std::vector<long long> w(k);
    std::vector<int> sign(k);
    long long total = 0;
    for (int j = 0; j < k; ++j) {
      w[j] = 1 + static_cast<long long>(rand_below(rng, 16));
      sign[j] = rand_below(rng, 2) == 0 ? 1 : -1;
      total += w[j];
    }
    std::vector<Rat> a(k), b(k);
    for (int j = 0; j < k; ++j) a[j] = Rat(sign[j] * w[j], total);

    // Slack budget up to alpha*eps, spread over the entries; clamping at 2
    // keeps |b_j| <= 1 and only lowers the spent slack.
    const Rat budget = cfg.alpha * cfg.eps * Rat(rand_below(rng, 5), 4);
    std::vector<long long> g(k);
    Rat weighted;
    for (int j = 0; j < k; ++j) {
      g[j] = static_cast<long long>(rand_below(rng, 9));
      weighted += Rat(g[j] * w[j], total);
    }
    for (int j = 0; j < k; ++j) {
      Rat delta;
      if (weighted != 0) {
        delta = Rat(g[j]) * budget / weighted;
        if (delta > 2) delta = 2;
      }
      b[j] = Rat(sign[j]) * (Rat(1) - delta);
    }
    attempts.run(3, "tail mass stays below eps", [&] {
      const MassConcentration mc =
          mass_concentration_check(a, b, cfg.alpha, cfg.eps);
      require(mc.pass, "tail mass above eps");
    });
  }

  std::vector<PointPair> trivial;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q && M->segment(p, q).size() == 2) trivial.push_back({p, q});
  const int picks = std::min<int>(4, static_cast<int>(trivial.size()));
  for (int t = 0; t < picks; ++t) {
    const std::size_t j =
        t + rand_below(rng, trivial.size() - static_cast<std::size_t>(t));
    std::swap(trivial[t], trivial[j]);
    const PointPair pair = trivial[t];
    const SpacePtr Mq = rebased(M, pair.y);
    attempts.run(4, "split of the optimal representation", [&] {
      check_split(Mq, pair,
                  split_optimal(Mq, pair.x, pair.y, cfg.alpha, cfg.eps),
                  cfg.eps);
    });
    const Representation padded = padded_molecule_representation(
        Mq, pair.x, pair.y, cfg.alpha, cfg.eps, rng);
    attempts.run(4, "split of a padded representation", [&] {
      check_split(Mq, pair,
                  split_representation(Mq, pair.x, pair.y, padded, cfg.alpha,
                                       cfg.eps),
                  cfg.eps);
    });
  }

  for (int t = 0; t < 2; ++t) {
    const std::vector<int> n1 = random_subset(*M, rng);
    const std::vector<int> n2 = random_subset(*M, rng);
    const FreeElement mu = random_element(M, rng);
    attempts.run(5, "intersection shadow", [&] {
      const std::vector<int> n12 = intersect(n1, n2);
      const Rat d1 = dist_to_subspace(mu, n1).value;
      const Rat d2 = dist_to_subspace(mu, n2).value;
      const Rat d12 = dist_to_subspace(mu, n12).value;
      require(d12 >= d1 && d12 >= d2,
              "distance dropped on a smaller subspace");
      require((d1 == 0) == support_inside(mu, n1),
              "membership test failed for the first subset");
      require((d2 == 0) == support_inside(mu, n2),
              "membership test failed for the second subset");
      require((d12 == 0) == (d1 == 0 && d2 == 0),
              "intersection shadow failed");
      const FreeElement mu1 = restrict_to(mu, n1);
      require(dist_to_subspace(mu1, n1).value == 0,
              "restricted element left its subspace");
      require((dist_to_subspace(mu1, n12).value == 0) ==
                  support_inside(mu1, n2),
              "restricted element misclassified against the intersection");
    });
  }
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const CheckStat& stat : checks)
    if (stat.failed != 0) return false;
  return true;
}

long long SuiteReport::total_checked() const {
  long long total = 0;
  for (const CheckStat& stat : checks) total += stat.checked;
  return total;
}

std::vector<SpacePtr> corpus(std::uint64_t seed, int count, int min_n,
                             int max_n) {
  if (count < 0 || min_n < 2 || max_n < min_n)
    throw Error(ErrorKind::PreconditionNotMet,
                "corpus needs count >= 0 and 2 <= min_n <= max_n");
  const int span = max_n - min_n + 1;
  std::vector<SpacePtr> spaces;
  spaces.reserve(count);
  for (int i = 0; i < count; ++i) {
    const Profile profile = kProfiles[i % 3];
    const int n = min_n + (i / 3) % span;
    spaces.push_back(random_space(n, profile, seed + i));
  }
  return spaces;
}

FreeElement random_element(const SpacePtr& M, std::mt19937_64& rng) {
  std::vector<Rat> coeffs(M->size());
  for (int x = 0; x < M->size(); ++x) {
    if (x == M->base() || rand_below(rng, 2) == 0) continue;
    const long long num = static_cast<long long>(rand_below(rng, 17)) - 8;
    const long long den = 1 + static_cast<long long>(rand_below(rng, 4));
    coeffs[x] = Rat(num, den);
  }
  return FreeElement(M, std::move(coeffs));
}

Representation padded_molecule_representation(const SpacePtr& M, int p, int q,
                                              const Rat& alpha, const Rat& eps,
                                              std::mt19937_64& rng) {
  check_pair(*M, p, q);
  if (M->base() != q)
    throw Error(ErrorKind::PreconditionNotMet,
                "the base point must be q; rebase first");
  const int n = M->size();
  if (n < 3)
    throw Error(ErrorKind::PreconditionNotMet,
                "padding needs at least three points");

  const Rat budget = Rat(1) / (Rat(1) - eps * alpha) - Rat(1);
  Representation r;
  r.terms.push_back({Rat(1), {p, q}});

  // Reversed pair: cancels exactly, lands on both sides of the split.
  const int u = static_cast<int>(rand_below(rng, n));
  const int v = random_point_except(rng, n, u);
  const Rat t1 = budget / 4;
  r.terms.push_back({t1, {u, v}});
  r.terms.push_back({t1, {v, u}});

  // Triangle loop: cancels as an element, spends the rest of the budget.
  const int a = static_cast<int>(rand_below(rng, n));
  const int b = random_point_except(rng, n, a);
  int c = 0;
  {
    std::size_t skip = rand_below(rng, n - 2);
    for (int t = 0; t < n; ++t) {
      if (t == a || t == b) continue;
      if (skip == 0) {
        c = t;
        break;
      }
      --skip;
    }
  }
  const Rat perimeter = M->dist(a, b) + M->dist(b, c) + M->dist(c, a);
  const Rat s = budget / 2 / perimeter;
  r.terms.push_back({s * M->dist(a, b), {a, b}});
  r.terms.push_back({s * M->dist(b, c), {b, c}});
  r.terms.push_back({s * M->dist(c, a), {c, a}});
  return r;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const std::vector<SpacePtr> spaces =
      corpus(config.seed, config.count, config.min_n, config.max_n);
  std::vector<SpaceOutcome> outcomes(spaces.size());
  parallel_for_index(static_cast<int>(spaces.size()), config.threads,
                     [&](int i) { run_space(config, i, spaces[i], outcomes[i]); });

  SuiteReport report;
  for (int family = 0; family < kFamilies; ++family) {
    CheckStat stat;
    stat.name = kFamilyNames[family];
    for (const SpaceOutcome& out : outcomes) {
      stat.checked += out.checked[family];
      stat.failed += out.failed[family];
    }
    report.checks.push_back(std::move(stat));
  }
  for (const SpaceOutcome& out : outcomes)
    for (const std::string& message : out.failures)
      if (report.failures.size() < kMaxFailures)
        report.failures.push_back(message);
  return report;
}

void parallel_for_index(int count, int threads,
                        const std::function<void(int)>& fn) {
  if (count <= 0) return;
  int workers = threads > 0
                    ? threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::mutex gate;
  int first_error = count;
  std::exception_ptr error;
  auto body = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(gate);
        if (i < first_error) {
          first_error = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (std::thread& worker : pool) worker.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace lipfree
