#include <cstdio>
#include <doctest.h>
#include <filesystem>
#include <fstream>

#include "lipfree/document.hpp"
#include "lipfree/error.hpp"
#include "lipfree/extremal.hpp"
#include "lipfree/random_space.hpp"
#include "oracles.hpp"

using namespace lipfree;
using doc::Json;
using testutil::expect_error;

TEST_CASE("rationals to and from JSON") {
  CHECK(doc::rational_to_json(Rat(5)).is_number_integer());
  CHECK(doc::rational_to_json(Rat(5)).get<int>() == 5);
  CHECK(doc::rational_to_json(Rat(3, 2)).is_string());
  CHECK(doc::rational_to_json(Rat(3, 2)).get<std::string>() == "3/2");
  // values past 2^53 go out as strings to survive double-based readers
  const Rat huge = Rat(BigInt(1) << 60);
  CHECK(doc::rational_to_json(huge).is_string());
  CHECK(doc::rational_from_json(doc::rational_to_json(huge)) == huge);

  CHECK(doc::rational_from_json(Json(7)) == Rat(7));
  CHECK(doc::rational_from_json(Json(-2)) == Rat(-2));
  CHECK(doc::rational_from_json(Json("5/10")) == Rat(1, 2));
  CHECK(doc::rational_from_json(Json(0.5)) == Rat(1, 2));
  expect_error([] { doc::rational_from_json(Json(true)); },
               ErrorKind::ParseError);
  expect_error([] { doc::rational_from_json(Json("x")); },
               ErrorKind::ParseError);
}

TEST_CASE("space documents round-trip") {
  for (const SpacePtr& M :
       {testutil::path_space(), random_space(7, Profile::Euclidean, 3),
        random_space(6, Profile::Generic, 9)}) {
    const Json j = doc::space_to_json(*M);
    CHECK(j.at("format") == "space");
    CHECK(j.at("version") == 1);
    SpacePtr back = doc::space_from_json(j);
    CHECK(*back == *M);
    CHECK(doc::dump(doc::space_to_json(*back)) == doc::dump(j));
  }
}

TEST_CASE("space documents accept every rational spelling") {
  const Json j = Json::parse(R"({
    "format": "space", "version": 1,
    "points": ["a", "b"], "base": "a",
    "d": [[0, 0.5], ["1/2", 0]]
  })");
  SpacePtr M = doc::space_from_json(j);
  CHECK(M->dist(0, 1) == Rat(1, 2));
}

TEST_CASE("malformed space documents") {
  auto parse = [](const char* text) {
    return doc::space_from_json(Json::parse(text));
  };
  expect_error([&] { parse(R"({"format":"element","version":1})"); },
               ErrorKind::ParseError);
  expect_error([&] { parse(R"({"format":"space","version":2})"); },
               ErrorKind::ParseError);
  expect_error(
      [&] {
        parse(R"({"format":"space","version":1,"points":["a","b"],
                  "base":"c","d":[[0,1],[1,0]]})");
      },
      ErrorKind::ParseError);
  expect_error(
      [&] {
        parse(R"({"format":"space","version":1,"points":["a","b"],
                  "base":"a","d":[[0,1]]})");
      },
      ErrorKind::ParseError);
  expect_error(
      [&] {
        parse(R"({"format":"space","version":1,"points":["a",7],
                  "base":"a","d":[[0,1],[1,0]]})");
      },
      ErrorKind::ParseError);
  // structurally fine, metrically broken: the validator speaks, not the parser
  expect_error(
      [&] {
        parse(R"({"format":"space","version":1,"points":["a","b"],
                  "base":"a","d":[[0,1],[2,0]]})");
      },
      ErrorKind::AsymmetricMatrix);
}

TEST_CASE("element documents round-trip and stay sparse") {
  SpacePtr M = testutil::path_space();
  const FreeElement mu(M, {Rat(1), Rat(0), Rat(0)});
  const Json j = doc::element_to_json(mu);
  CHECK(j.at("coeffs").size() == 1);  // zero entries are omitted
  const FreeElement back = doc::element_from_json(j);
  CHECK(back == mu);

  expect_error(
      [&] {
        Json bad = j;
        bad["coeffs"]["q"] = 1;  // base coefficient is not a free slot
        doc::element_from_json(bad);
      },
      ErrorKind::ParseError);
  expect_error(
      [&] {
        Json bad = j;
        bad["coeffs"]["ghost"] = 1;
        doc::element_from_json(bad);
      },
      ErrorKind::UnknownPoint);
}

TEST_CASE("function bodies require every point exactly once") {
  SpacePtr M = testutil::path_space();
  const LipFunction f(M, {Rat(2), Rat(1), Rat(0)});
  const Json body = doc::function_body(f);
  CHECK(doc::function_from_body(M, body) == f);
  expect_error(
      [&] {
        Json missing = body;
        missing.erase("z");
        doc::function_from_body(M, missing);
      },
      ErrorKind::ParseError);
  expect_error(
      [&] {
        Json extra = body;
        extra["ghost"] = 0;
        doc::function_from_body(M, extra);
      },
      ErrorKind::ParseError);
}

TEST_CASE("representation bodies round-trip") {
  SpacePtr M = testutil::path_space();
  Representation r;
  r.terms.push_back({Rat(1, 2), {0, 1}});
  r.terms.push_back({Rat(3), {2, 0}});
  const Json body = doc::representation_body(*M, r);
  const Representation back = doc::representation_from_body(*M, body);
  REQUIRE(back.terms.size() == 2);
  CHECK(back.terms[0].weight == Rat(1, 2));
  CHECK(back.terms[0].pair == PointPair{0, 1});
  CHECK(back.terms[1].weight == Rat(3));
  CHECK(back.terms[1].pair == PointPair{2, 0});
}

TEST_CASE("certificate documents replay") {
  SpacePtr M = random_space(6, Profile::Generic, 21);
  for (int x = 0; x < M->size(); ++x) {
    for (int y = x + 1; y < M->size(); ++y) {
      if (M->segment(x, y).size() != 2) continue;
      const ExposureCertificate cert = exposure_certificate(M, {x, y});
      const Json j = doc::certificate_to_json(M, cert);
      auto [space, back] = doc::certificate_from_json(j);
      CHECK(*space == *M);
      CHECK(back.pair == cert.pair);
      CHECK(back.margin == cert.margin);
      CHECK(verify_certificate(space, back));
      CHECK(doc::dump(doc::certificate_to_json(space, back)) == doc::dump(j));
    }
  }
}

TEST_CASE("dist queries round-trip") {
  SpacePtr M = testutil::path_space();
  doc::DistQuery query{FreeElement(M, {Rat(1), Rat(1, 2), Rat(0)}), {1, 2}};
  const Json j = doc::dist_query_to_json(query);
  const doc::DistQuery back = doc::dist_query_from_json(j);
  CHECK(back.element == query.element);
  CHECK(back.subset == query.subset);
}

TEST_CASE("documents written to disk read back identically") {
  namespace fs = std::filesystem;
  const fs::path file =
      fs::temp_directory_path() / "lipfree_doc_roundtrip.json";
  const Json j = doc::space_to_json(*testutil::path_space());
  doc::write_document(file, j);
  const Json back = doc::read_document(file);
  CHECK(back == j);
  std::remove(file.c_str());

  expect_error([&] { doc::read_document(file); }, ErrorKind::ParseError);

  const fs::path garbage = fs::temp_directory_path() / "lipfree_garbage.json";
  std::ofstream(garbage) << "{not json";
  expect_error([&] { doc::read_document(garbage); }, ErrorKind::ParseError);
  std::remove(garbage.c_str());
}

TEST_CASE("dump is deterministic and newline-terminated") {
  const Json j = doc::space_to_json(*testutil::equilateral());
  const std::string a = doc::dump(j);
  CHECK(a == doc::dump(doc::space_to_json(*testutil::equilateral())));
  REQUIRE_FALSE(a.empty());
  CHECK(a.back() == '\n');
}
