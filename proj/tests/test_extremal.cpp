#include <doctest.h>

#include "lipfree/error.hpp"
#include "lipfree/extremal.hpp"
#include "lipfree/norms.hpp"
#include "lipfree/suite.hpp"
#include "oracles.hpp"

using namespace lipfree;
using testutil::expect_error;

TEST_CASE("two-point space: exposed with margin 2") {
  SpacePtr M = testutil::two_point(5);
  const MoleculeReport report = classify_molecule(M, {0, 1});
  CHECK(report.is_trivial_segment);
  CHECK(report.is_extreme);
  CHECK(report.is_exposed);
  REQUIRE(report.certificate.has_value());
  // the only competitor is the reversed pair, paired to -1
  CHECK(report.certificate->margin == Rat(2));
  CHECK(verify_certificate(M, *report.certificate));
  CHECK_FALSE(report.decomposition.has_value());
  CHECK(brute_force_extreme(M, {0, 1}).extreme);
  CHECK(brute_force_extreme(M, {1, 0}).extreme);
}

TEST_CASE("path space: interior point kills extremality") {
  SpacePtr M = testutil::path_space();
  const MoleculeReport report = classify_molecule(M, {0, 2});
  CHECK_FALSE(report.is_trivial_segment);
  CHECK_FALSE(report.is_extreme);
  CHECK_FALSE(report.is_exposed);
  CHECK(report.segment_points == std::vector<int>{0, 1, 2});
  CHECK(report.witness_point == 1);
  REQUIRE(report.decomposition.has_value());
  REQUIRE(report.decomposition->terms.size() == 2);
  CHECK(report.decomposition->terms[0].weight == Rat(1, 2));
  CHECK(report.decomposition->terms[0].pair == PointPair{0, 1});
  CHECK(report.decomposition->terms[1].weight == Rat(1, 2));
  CHECK(report.decomposition->terms[1].pair == PointPair{1, 2});
  CHECK(from_representation(M, *report.decomposition) ==
        FreeElement::molecule(M, {0, 2}));

  expect_error([&] { exposure_certificate(M, {0, 2}); },
               ErrorKind::NontrivialSegment);

  const ExtremeDecision decision = brute_force_extreme(M, {0, 2});
  CHECK_FALSE(decision.extreme);
  REQUIRE(decision.combination.has_value());
  Rat total(0);
  for (const auto& term : decision.combination->terms) {
    CHECK(term.weight > 0);
    total += term.weight;
    const bool is_target = term.pair == PointPair{0, 2};
    CHECK_FALSE(is_target);
  }
  CHECK(total == Rat(1));
  CHECK(from_representation(M, *decision.combination) ==
        FreeElement::molecule(M, {0, 2}));
}

TEST_CASE("equilateral triangle: margin 1/2 on every pair") {
  SpacePtr M = testutil::equilateral();
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == y) continue;
      const ExposureCertificate cert = exposure_certificate(M, {x, y});
      CHECK(cert.margin == Rat(1, 2));
      CHECK(verify_certificate(M, cert));
    }
}

TEST_CASE("exposure margin of a nontrivial pair is exactly zero") {
  SpacePtr M = testutil::path_space();
  CHECK(exposure_margin(magic_function(M, 0, 2), {0, 2}) == Rat(0));
  expect_error([&] { exposure_margin(magic_function(M, 0, 2), {1, 1}); },
               ErrorKind::SamePoint);
  SpacePtr tiny = testutil::two_point(1);
  CHECK(exposure_margin(magic_function(tiny, 0, 1), {0, 1}) == Rat(2));
}

TEST_CASE("verify_certificate rejects tampering") {
  SpacePtr M = testutil::equilateral();
  const ExposureCertificate good = exposure_certificate(M, {1, 2});
  CHECK(verify_certificate(M, good));

  ExposureCertificate wrong_margin = good;
  wrong_margin.margin = Rat(1, 4);
  CHECK_FALSE(verify_certificate(M, wrong_margin));

  std::vector<Rat> values = good.function.values();
  values[1] += Rat(1, 8);
  ExposureCertificate wrong_function{good.pair, LipFunction(M, values),
                                     good.margin};
  CHECK_FALSE(verify_certificate(M, wrong_function));

  CHECK_FALSE(verify_certificate(testutil::path_space(), good));
}

TEST_CASE("segment criterion matches the brute-force LP") {
  for (const SpacePtr& M : corpus(41, 24, 3, 7)) {
    for (int p = 0; p < M->size(); ++p)
      for (int q = 0; q < M->size(); ++q) {
        if (p == q) continue;
        const MoleculeReport report = classify_molecule(M, {p, q});
        const ExtremeDecision decision = brute_force_extreme(M, {p, q});
        CHECK(report.is_extreme == decision.extreme);
        if (!decision.extreme) {
          CHECK(from_representation(M, *decision.combination) ==
                FreeElement::molecule(M, {p, q}));
        }
      }
  }
}

TEST_CASE("mass concentration frozen examples") {
  const Rat alpha(1, 4), eps(1, 4);
  {
    const MassConcentration mc = mass_concentration_check(
        {Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(1)}, alpha, eps);
    CHECK(mc.pass);
    CHECK(mc.tail_mass == Rat(0));
    CHECK(mc.inner == Rat(1));
  }
  {
    // inner product exactly at the 1 - alpha*eps boundary, tail exactly eps
    const MassConcentration mc = mass_concentration_check(
        {Rat(3, 4), Rat(1, 4)}, {Rat(1), Rat(3, 4)}, alpha, eps);
    CHECK(mc.inner == Rat(1) - alpha * eps);
    CHECK(mc.tail_mass == eps);
    CHECK(mc.pass);
  }
  // dropping the hypothesis is refused, not reported as failure
  expect_error(
      [&] {
        mass_concentration_check({Rat(3, 4), Rat(1, 4)}, {Rat(1), Rat(0)},
                                 alpha, eps);
      },
      ErrorKind::PreconditionNotMet);
}

TEST_CASE("mass concentration input validation") {
  const Rat alpha(1, 4), eps(1, 4);
  expect_error(
      [&] { mass_concentration_check({Rat(1)}, {Rat(1), Rat(1)}, alpha, eps); },
      ErrorKind::NormViolation);
  expect_error(
      [&] {
        mass_concentration_check({Rat(1, 2), Rat(1, 4)}, {Rat(1), Rat(1)},
                                 alpha, eps);
      },
      ErrorKind::NormViolation);
  expect_error(
      [&] {
        mass_concentration_check({Rat(1, 2), Rat(1, 2)}, {Rat(2), Rat(1)},
                                 alpha, eps);
      },
      ErrorKind::NormViolation);
  expect_error(
      [&] {
        mass_concentration_check({Rat(1)}, {Rat(1)}, Rat(0), eps);
      },
      ErrorKind::NormViolation);
  expect_error(
      [&] {
        mass_concentration_check({Rat(1)}, {Rat(1)}, alpha, Rat(1));
      },
      ErrorKind::NormViolation);
}

TEST_CASE("split of the telescoped path representation") {
  SpacePtr M = testutil::path_space();  // base is q
  Representation r;
  r.terms.push_back({Rat(1, 2), {0, 1}});
  r.terms.push_back({Rat(1, 2), {1, 2}});
  const SplitResult split =
      split_representation(M, 0, 2, r, Rat(1, 4), Rat(1, 4));
  CHECK(split.good.terms.size() == 2);
  CHECK(split.bad.terms.empty());
  CHECK(split.bad_mass == Rat(0));
}

TEST_CASE("split preconditions") {
  SpacePtr M = testutil::path_space();
  Representation r;
  r.terms.push_back({Rat(1), {0, 2}});

  expect_error(
      [&] { split_representation(M, 0, 2, r, Rat(1, 2), Rat(1, 4)); },
      ErrorKind::PreconditionNotMet);
  expect_error(
      [&] { split_representation(M, 0, 2, r, Rat(1, 4), Rat(0)); },
      ErrorKind::PreconditionNotMet);
  // base must be q: here the pair is reversed
  expect_error(
      [&] { split_representation(M, 2, 0, r, Rat(1, 4), Rat(1, 4)); },
      ErrorKind::PreconditionNotMet);

  Representation heavy;
  heavy.terms.push_back({Rat(2), {0, 2}});
  heavy.terms.push_back({Rat(1), {2, 0}});
  expect_error(
      [&] { split_representation(M, 0, 2, heavy, Rat(1, 4), Rat(1, 4)); },
      ErrorKind::PreconditionNotMet);

  // pairing != 1: half of the molecule pairs to 1/2
  Representation wrong;
  wrong.terms.push_back({Rat(1, 2), {0, 2}});
  expect_error(
      [&] { split_representation(M, 0, 2, wrong, Rat(1, 4), Rat(1, 4)); },
      ErrorKind::PreconditionNotMet);
}

TEST_CASE("split rejects elements off the unit sphere") {
  // p - z - q chain plus a remote point w; adding a small multiple of
  // m_wz keeps the pairing at one but pushes the norm above one.
  SpacePtr M = testutil::make_space(
      {"p", "z", "q", "w"}, 2,
      {{0, 1, 2, 5}, {1, 0, 1, 5}, {2, 1, 0, 5}, {5, 5, 5, 0}});
  Representation r;
  r.terms.push_back({Rat(1), {0, 2}});
  r.terms.push_back({Rat(1, 15), {3, 1}});
  CHECK(r.mass() == Rat(16, 15));
  const FreeElement mu = from_representation(M, r);
  CHECK(mu.pairing(magic_function(M, 0, 2)) == Rat(1));
  CHECK(dual_norm(mu) == Rat(1) + Rat(4, 75));
  expect_error(
      [&] { split_representation(M, 0, 2, r, Rat(1, 4), Rat(1, 4)); },
      ErrorKind::PreconditionNotMet);
}

TEST_CASE("split of the optimal representation of a molecule is clean") {
  for (const SpacePtr& M : corpus(43, 9, 3, 7)) {
    for (int p = 0; p < M->size(); ++p) {
      const int q = M->base();
      if (p == q || M->segment(p, q).size() != 2) continue;
      const SplitResult split = split_optimal(M, p, q, Rat(1, 4), Rat(1, 8));
      CHECK(split.bad_mass == Rat(0));
      CHECK(from_representation(M, split.good) ==
            FreeElement::molecule(M, {p, q}));
    }
  }
}

TEST_CASE("split of a padded representation stays within budget") {
  SpacePtr M = testutil::path_space();
  std::mt19937_64 rng(47);
  const Rat alpha(1, 4), eps(1, 4);
  for (int round = 0; round < 10; ++round) {
    const Representation padded =
        padded_molecule_representation(M, 0, 2, alpha, eps, rng);
    CHECK(padded.mass() == Rat(1) / (Rat(1) - eps * alpha));
    CHECK(from_representation(M, padded) == FreeElement::molecule(M, {0, 2}));
    const SplitResult split =
        split_representation(M, 0, 2, padded, alpha, eps);
    CHECK(split.bad_mass <= 2 * eps);
    CHECK(from_representation(M, split.good) +
              from_representation(M, split.bad) ==
          FreeElement::molecule(M, {0, 2}));
  }
}
