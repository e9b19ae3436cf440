#include <doctest.h>

#include "lipfree/error.hpp"
#include "lipfree/lip_function.hpp"
#include "lipfree/suite.hpp"
#include "oracles.hpp"

using namespace lipfree;
using testutil::expect_error;

TEST_CASE("LipFunction construction rules") {
  SpacePtr M = testutil::path_space();
  LipFunction f(M, {Rat(2), Rat(1), Rat(0)});
  CHECK(f.value(0) == Rat(2));
  CHECK(f.values().size() == 3);
  expect_error([&] { LipFunction(M, {Rat(1), Rat(1)}); },
               ErrorKind::ParseError);
  // the base value must vanish
  expect_error([&] { LipFunction(M, {Rat(0), Rat(0), Rat(1)}); },
               ErrorKind::NormViolation);
}

TEST_CASE("lip_norm frozen examples") {
  SpacePtr M = testutil::two_point(2);
  CHECK(LipFunction(M, {Rat(0), Rat(3)}).lip_norm() == Rat(3, 2));
  CHECK(LipFunction(M, {Rat(0), Rat(0)}).lip_norm() == Rat(0));
  SpacePtr path = testutil::path_space();
  CHECK(LipFunction(path, {Rat(2), Rat(1), Rat(0)}).lip_norm() == Rat(1));
  CHECK(LipFunction(path, {Rat(1), Rat(2), Rat(0)}).lip_norm() == Rat(2));
  SpacePtr single =
      FiniteMetricSpace::validate({"only"}, 0, {{Rat(0)}});
  expect_error([&] { LipFunction(single, {Rat(0)}).lip_norm(); },
               ErrorKind::SingletonSpace);
}

TEST_CASE("pair_quotient is antisymmetric and bounded by the norm") {
  std::mt19937_64 rng(31);
  for (const SpacePtr& M : corpus(31, 12, 3, 7)) {
    std::vector<Rat> values(M->size());
    for (int x = 0; x < M->size(); ++x) {
      if (x == M->base()) continue;
      values[x] = Rat(static_cast<long long>(rand_below(rng, 21)) - 10,
                      1 + static_cast<long long>(rand_below(rng, 3)));
    }
    LipFunction f(M, values);
    const Rat norm = f.lip_norm();
    bool attained = false;
    for (int u = 0; u < M->size(); ++u)
      for (int v = 0; v < M->size(); ++v) {
        if (u == v) continue;
        const Rat quotient = f.pair_quotient(u, v);
        CHECK(quotient == -f.pair_quotient(v, u));
        CHECK(rat_abs(quotient) <= norm);
        if (rat_abs(quotient) == norm) attained = true;
      }
    CHECK(attained);
    expect_error([&] { f.pair_quotient(0, 0); }, ErrorKind::SamePoint);
  }
}

TEST_CASE("magic function on the path space") {
  SpacePtr M = testutil::path_space();
  LipFunction f = magic_function(M, 0, 2);
  CHECK(f.value(0) == Rat(2));
  CHECK(f.value(1) == Rat(1));
  CHECK(f.value(2) == Rat(0));
  CHECK(f.lip_norm() == Rat(1));
  CHECK(f.pair_quotient(0, 2) == Rat(1));
  // interior point keeps the quotient at one: the pair cannot be exposed
  CHECK(f.pair_quotient(0, 1) == Rat(1));
  CHECK(f.pair_quotient(1, 2) == Rat(1));
}

TEST_CASE("magic function on the two-point space") {
  SpacePtr M = testutil::two_point(2);
  LipFunction f = magic_function(M, 0, 1);
  CHECK(f.value(0) == Rat(0));  // base is p here
  CHECK(f.value(1) == Rat(-2));
  CHECK(f.pair_quotient(0, 1) == Rat(1));
  CHECK(f.pair_quotient(1, 0) == Rat(-1));
  CHECK(f.lip_norm() == Rat(1));
}

TEST_CASE("magic function on the equilateral triangle") {
  SpacePtr M = testutil::equilateral();
  LipFunction f = magic_function(M, 1, 2);
  CHECK(f.value(0) == Rat(0));
  CHECK(f.value(1) == Rat(1, 2));
  CHECK(f.value(2) == Rat(-1, 2));
  CHECK(f.pair_quotient(1, 2) == Rat(1));
  CHECK(f.pair_quotient(1, 0) == Rat(1, 2));
  CHECK(f.pair_quotient(0, 2) == Rat(1, 2));
}

TEST_CASE("magic function properties over random spaces") {
  for (const SpacePtr& M : corpus(17, 18, 3, 8)) {
    const int n = M->size();
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (p == q) continue;
        LipFunction f = magic_function(M, p, q);
        CHECK(f.value(M->base()) == Rat(0));
        CHECK(f.lip_norm() <= Rat(1));
        CHECK(f.pair_quotient(p, q) == Rat(1));
      }
  }
}
