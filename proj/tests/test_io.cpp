#include <doctest.h>

#include <lts/io.hpp>
#include <lts/representation.hpp>
#include <lts/triple_system.hpp>

#include "common/fixtures.hpp"

#include <string>

using namespace lts;

TEST_CASE("algebra file loader reproduces the in-memory builder") {
  const TripleSystem loaded = load_algebra_file(fixtures::path("ex1_algebra.json"));
  CHECK(loaded == fixtures::example1());

  const TripleSystem loaded2 = load_algebra_file(fixtures::path("ex2_algebra.json"));
  CHECK(loaded2 == fixtures::example2());
}

TEST_CASE("algebra serialization round trips through the parser") {
  for (const TripleSystem& t :
       {fixtures::example1(), fixtures::example2(),
        from_lie_algebra(fixtures::sl2_like())}) {
    const std::string text = algebra_to_json(t);
    const TripleSystem back = parse_algebra_json(text);
    CHECK(back == t);
  }
}

TEST_CASE("map file loader fills entries in row/column order") {
  const LinearMap T = load_map_file(fixtures::path("ex1_T.json"));
  CHECK(T == fixtures::example1_T(Rational(1), Rational(2)));

  const LinearMap Z = load_map_file(fixtures::path("zero_map_2x2.json"));
  CHECK(Z.is_zero());
  CHECK(Z.rows() == 2);
  CHECK(Z.cols() == 2);
}

TEST_CASE("representation file loader matches the derived adjoint tables") {
  const Representation rep =
      load_representation_file(fixtures::path("ex1_adjoint_rep.json"));
  const Representation adj = adjoint_representation(fixtures::example1());
  CHECK(rep == adj);
}

TEST_CASE("parser rejects malformed documents with input errors") {
  // Not JSON at all.
  CHECK_THROWS_AS(parse_algebra_json("this is not json"), InvalidInputError);
  // Wrong kind tag.
  CHECK_THROWS_AS(parse_algebra_json(R"({"kind": "linear_map", "dim": 2,
      "field": "rational", "brackets": []})"),
                  InvalidInputError);
  // Missing dim.
  CHECK_THROWS_AS(parse_algebra_json(R"({"kind": "triple_system",
      "field": "rational", "brackets": []})"),
                  InvalidInputError);
  // Non-positive dimension.
  CHECK_THROWS_AS(parse_algebra_json(R"({"kind": "triple_system", "dim": 0,
      "field": "rational", "brackets": []})"),
                  InvalidInputError);
  // Unsupported field tag.
  CHECK_THROWS_AS(parse_algebra_json(R"({"kind": "triple_system", "dim": 2,
      "field": "real", "brackets": []})"),
                  InvalidInputError);
  // Argument index out of range.
  CHECK_THROWS_AS(parse_algebra_json(R"({"kind": "triple_system", "dim": 2,
      "field": "rational",
      "brackets": [{"args": [0, 1, 2], "value": {"0": "1"}}]})"),
                  InvalidInputError);
  // Output index out of range.
  CHECK_THROWS_AS(parse_algebra_json(R"({"kind": "triple_system", "dim": 2,
      "field": "rational",
      "brackets": [{"args": [0, 1, 1], "value": {"2": "1"}}]})"),
                  InvalidInputError);
  // Malformed rational literal.
  CHECK_THROWS_AS(parse_algebra_json(R"({"kind": "triple_system", "dim": 2,
      "field": "rational",
      "brackets": [{"args": [0, 1, 1], "value": {"0": "1.5"}}]})"),
                  InvalidInputError);
  // Duplicate args entries.
  CHECK_THROWS_AS(parse_algebra_json(R"({"kind": "triple_system", "dim": 2,
      "field": "rational",
      "brackets": [{"args": [0, 1, 1], "value": {"0": "1"}},
                   {"args": [0, 1, 1], "value": {"0": "2"}}]})"),
                  InvalidInputError);
}

TEST_CASE("map and representation parsers validate their shapes") {
  CHECK_THROWS_AS(parse_map_json(R"({"kind": "linear_map", "rows": 2,
      "cols": 2, "entries": [["0", "1"]]})"),
                  InvalidInputError);
  CHECK_THROWS_AS(parse_map_json(R"({"kind": "linear_map", "rows": 2,
      "cols": 2, "entries": [["0", "1"], ["0"]]})"),
                  InvalidInputError);
  CHECK_THROWS_AS(parse_representation_json(R"({"kind": "representation",
      "base_dim": 2, "carrier_dim": 2, "field": "rational",
      "entries": [{"args": [0, 1], "matrix": [["0"], ["1"]]}]})"),
                  InvalidInputError);
  CHECK_THROWS_AS(parse_representation_json(R"({"kind": "representation",
      "base_dim": 2, "carrier_dim": 2, "field": "rational",
      "entries": [{"args": [0, 1], "matrix": [["0", "0"], ["1", "0"]]},
                  {"args": [0, 1], "matrix": [["0", "0"], ["0", "0"]]}]})"),
                  InvalidInputError);
}

TEST_CASE("file loaders report unreadable and truncated files") {
  CHECK_THROWS_AS(load_algebra_file(fixtures::path("no_such_file.json")),
                  InvalidInputError);
  CHECK_THROWS_AS(load_algebra_file(fixtures::path("truncated.json")),
                  InvalidInputError);
}
