#include <doctest.h>

#include "scover/constructions.hpp"
#include "scover/io.hpp"

using namespace scover;

TEST_CASE("serialize near_pencil(3)") {
  const std::string bytes = serialize(near_pencil(3));
  CHECK(bytes ==
        R"({"lines":[[0,1],[0,2],[1,2]],"metadata":{},"n":3,"s":2,"schema_version":1})");
}

TEST_CASE("empty family serializes with empty lines") {
  const std::string bytes = serialize(make_family(5, 3, {}));
  CHECK(bytes ==
        R"({"lines":[],"metadata":{},"n":5,"s":3,"schema_version":1})");
}

TEST_CASE("round trip is the identity on families") {
  const CoverFamily f = grid_construction(5, 4);
  CHECK(parse(serialize(f)) == f);

  const CoverFamily g = asymptotic_cover(50, 3);
  CHECK(parse(serialize(g)) == g);
}

TEST_CASE("serialize-parse-serialize is byte idempotent") {
  const std::map<std::string, std::string> meta = {{"construction", "grid"},
                                                   {"t", "5"},
                                                   {"s", "4"}};
  const std::string once = serialize(grid_construction(5, 4), meta);
  const FamilyDocument doc = parse_document(once);
  CHECK(doc.metadata == meta);
  CHECK(serialize(doc.family, doc.metadata) == once);
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(parse("not json"), std::runtime_error);
  CHECK_THROWS_AS(parse("[1,2,3]"), std::runtime_error);
  // Unsupported schema version.
  CHECK_THROWS_AS(
      parse(R"({"lines":[],"metadata":{},"n":3,"s":2,"schema_version":7})"),
      std::runtime_error);
  // Missing and unknown keys.
  CHECK_THROWS_AS(parse(R"({"lines":[],"n":3,"s":2,"schema_version":1})"),
                  std::runtime_error);
  CHECK_THROWS_AS(
      parse(
          R"({"extra":0,"lines":[],"metadata":{},"n":3,"s":2,"schema_version":1})"),
      std::runtime_error);
  // Non-integer point.
  CHECK_THROWS_WITH_AS(
      parse(
          R"({"lines":[[0,2.5]],"metadata":{},"n":3,"s":2,"schema_version":1})"),
      "parse: non-integer point in line 0", std::runtime_error);
  // Out-of-range point propagates with its line index.
  CHECK_THROWS_AS(
      parse(R"({"lines":[[0,9]],"metadata":{},"n":3,"s":2,"schema_version":1})"),
      std::invalid_argument);
  // Duplicate lines are named by both indices.
  CHECK_THROWS_WITH_AS(
      parse(
          R"({"lines":[[0,1],[1,2],[1,0]],"metadata":{},"n":3,"s":2,"schema_version":1})"),
      "make_family: duplicate line at input indices 0 and 2",
      std::invalid_argument);
  // Metadata values must be strings.
  CHECK_THROWS_AS(
      parse(
          R"({"lines":[],"metadata":{"k":3},"n":3,"s":2,"schema_version":1})"),
      std::runtime_error);
}

TEST_CASE("rational JSON uses exact integers") {
  const auto j = rational_json(Rational(11, 2));
  CHECK(j["num"] == 11);
  CHECK(j["den"] == 2);
}
