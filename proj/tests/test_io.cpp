#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lefschetz/families.hpp"
#include "lefschetz/io.hpp"
#include "test_util.hpp"

using namespace lefschetz;
using testutil::A;

TEST_SUITE("io") {

TEST_CASE("presentation round trip") {
  for (const auto& p : {make_complete_intersection(2, 3, 4), make_circulant(3, 2)}) {
    json doc = presentation_to_json(p);
    CHECK(doc["kind"] == "presentation");
    CHECK(presentation_from_json(doc) == p);
    CHECK(presentation_from_json(json::parse(doc.dump())) == p);
  }
}

TEST_CASE("presentation files") {
  ModuleInput in = load_input(testutil::data_path("ci222.json"));
  REQUIRE(std::holds_alternative<GradedPresentation>(in));
  CHECK(std::get<GradedPresentation>(in) == make_complete_intersection(2, 2, 2));
  CHECK(std::get<GradedPresentation>(load_input(testutil::data_path("circulant_3_2.json"))) == make_circulant(3, 2));
  CHECK_THROWS_WITH_AS(load_input(testutil::data_path("b1_le_a1.json")), doctest::Contains("b1_le_a1.json: b_1 = 1"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(load_input(testutil::data_path("missing.json")), doctest::Contains("cannot read file"),
                       ValidationError);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_WITH_AS(presentation_from_json(json::parse(R"({"a": [0], "b": [2, 2, 2]})")),
                       doctest::Contains("missing field \"entries\""), ValidationError);
  CHECK_THROWS_WITH_AS(presentation_from_json(json::parse(R"({"a": [0.5], "b": [2, 2, 2], "entries": [["x^2","y^2","z^2"]]})")),
                       doctest::Contains("not an integer"), ValidationError);
  CHECK_THROWS_AS(presentation_from_json(json::parse(R"({"a": [0], "b": [2, 2, 2], "entries": [["x^2","y^2",3]]})")),
                  ValidationError);

  std::string path = "io_test_malformed.json";
  {
    std::ofstream out(path);
    out << "{\"a\": [0], \"b\": [2, 2 2]}";
  }
  CHECK_THROWS_WITH_AS(read_json_file(path), doctest::Contains("malformed JSON at byte"), ValidationError);
  {
    std::ofstream out(path);
    out << R"({"kind": "banana"})";
  }
  CHECK_THROWS_WITH_AS(load_input(path), doctest::Contains("unknown kind"), ValidationError);
  std::remove(path.c_str());
}

TEST_CASE("structure round trip") {
  ArtinianGradedModule N = module_from_presentation(make_complete_intersection(2, 3, 4));
  json doc = module_to_json(N);
  CHECK(doc["kind"] == "structure");
  ArtinianGradedModule back = module_from_structure(doc);
  CHECK(back == N);
  CHECK(module_to_json(back) == doc);

  ArtinianGradedModule D = dual_module(N);
  CHECK(module_from_structure(module_to_json(D)) == D);
}

TEST_CASE("structure parsing") {
  json doc = json::parse(R"({"kind": "structure", "r": 2, "t0": 1, "dims": [1, 1],
                             "matrices": {"1,1": [["1/2"]], "2,1": [[0]]}})");
  ArtinianGradedModule N = module_from_structure(doc);
  CHECK(N.initial_degree() == 1);
  CHECK(N.structure(0, 1)(0, 0) == testutil::Q(1, 2));

  json missing = doc;
  missing["matrices"].erase("2,1");
  CHECK_THROWS_WITH_AS(module_from_structure(missing), doctest::Contains("missing matrix \"2,1\""), ValidationError);
  json bad_key = doc;
  bad_key["matrices"]["3,1"] = json::parse("[[1]]");
  CHECK_THROWS_WITH_AS(module_from_structure(bad_key), doctest::Contains("variable index out of range"),
                       ValidationError);
  json bad_shape = doc;
  bad_shape["matrices"]["1,1"] = json::parse("[[1, 2]]");
  CHECK_THROWS_AS(module_from_structure(bad_shape), ValidationError);
  json noncommuting = json::parse(R"({"kind": "structure", "r": 2, "dims": [1, 1, 1],
      "matrices": {"1,0": [[1]], "1,1": [[0]], "2,0": [[0]], "2,1": [[1]]}})");
  CHECK_THROWS_WITH_AS(module_from_structure(noncommuting), doctest::Contains("do not commute"), ValidationError);
}

TEST_CASE("ideal formatting") {
  CHECK(ideal_to_string(DualIdeal::zero(3)) == "(0)");
  CHECK(ideal_to_string(DualIdeal::unit(3)) == "(1)");
  DualIdeal I(3, {A("2*a1*a2*a3"), A("4*a1*a2*a3")});
  CHECK(ideal_to_string(I) == "(a1*a2*a3)");
  json j = ideal_to_json(I);
  CHECK(j.is_array());
  CHECK(j.size() == 1);
  CHECK(rational_to_json(testutil::Q(-3, 6)) == "-1/2");
  CHECK(rational_to_json(Rational(4)) == 4);
}

}  // TEST_SUITE
