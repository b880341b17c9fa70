#include <doctest.h>

#include <string>

#include "golden/config.hpp"

using namespace golden;

namespace {

// A minimal complete workspace used as the mutation baseline.
const char* kBase = R"({
  "sampling": {"seed": 7, "points-per-check": 9, "fields-per-point": 3},
  "tolerances": {"flag": 1e-7, "cross-check": 1e-6},
  "manifolds": [
    {
      "name": "plane",
      "dim": 2,
      "coordinate-names": ["x1", "x2"],
      "sample-box": [[-1, 1], [-1, 1]],
      "metric": [["1", "0"], ["0", "1"]]
    }
  ],
  "structures": [
    {
      "name": "plane-P",
      "manifold": "plane",
      "kind": "product",
      "components": [["1", "0"], ["0", "-1"]]
    }
  ],
  "maps": [
    {
      "name": "ident",
      "source": "plane",
      "target": "plane",
      "components": ["x1", "x2"]
    }
  ]
})";

bool parse_fails_mentioning(const std::string& text, const char* needle) {
  try {
    parse_workspace(text, "inline");
  } catch (const ConfigError& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

std::string replaced(const std::string& from, const std::string& to) {
  std::string text = kBase;
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  text.replace(at, from.size(), to);
  return text;
}

}  // namespace

TEST_CASE("baseline workspace parses") {
  WorkspaceConfig ws = parse_workspace(kBase, "inline");
  CHECK(ws.sampling.seed == 7);
  CHECK(ws.sampling.points == 9);
  CHECK(ws.sampling.fields_per_point == 3);
  CHECK(ws.tolerances.flag == doctest::Approx(1e-7));
  CHECK(ws.tolerances.cross_check == doctest::Approx(1e-6));
  REQUIRE(ws.catalog.manifolds.size() == 1);
  REQUIRE(ws.catalog.structures.size() == 1);
  REQUIRE(ws.catalog.maps.size() == 1);
  CHECK(ws.catalog.manifold("plane") != nullptr);
  CHECK(ws.catalog.structure("plane-P") != nullptr);
  CHECK(ws.catalog.map("ident") != nullptr);
}

TEST_CASE("default workspace carries the built-in catalog") {
  WorkspaceConfig ws = default_workspace();
  CHECK(ws.catalog.manifolds.size() == 4);
  CHECK(ws.catalog.structures.size() == 8);
  CHECK(ws.catalog.maps.size() == 7);
  CHECK(ws.sampling.seed == kDefaultSeed);
  CHECK(ws.sampling.points == 100);
  CHECK(ws.sampling.fields_per_point == 20);
}

TEST_CASE("malformed JSON is a config error with the origin") {
  CHECK(parse_fails_mentioning("{not json", "inline"));
}

TEST_CASE("missing manifolds array") {
  CHECK(parse_fails_mentioning(R"({"sampling": {}})", "manifolds"));
}

TEST_CASE("sample box ordering is validated") {
  CHECK(parse_fails_mentioning(
      replaced("[[-1, 1], [-1, 1]]", "[[1, -1], [-1, 1]]"), "sample-box"));
}

TEST_CASE("metric mirror entries must match as written") {
  CHECK(parse_fails_mentioning(
      replaced(R"([["1", "0"], ["0", "1"]])", R"([["1", "x1"], ["0", "1"]])"),
      "metric"));
}

TEST_CASE("degenerate metrics are rejected numerically") {
  CHECK(parse_fails_mentioning(
      replaced(R"([["1", "0"], ["0", "1"]])", R"([["0", "0"], ["0", "1"]])"),
      "plane"));
}

TEST_CASE("structure polynomial violations are rejected") {
  CHECK(parse_fails_mentioning(
      replaced(R"([["1", "0"], ["0", "-1"]])", R"([["2", "0"], ["0", "-1"]])"),
      "plane-P"));
}

TEST_CASE("unknown manifold references are rejected") {
  CHECK(parse_fails_mentioning(replaced(R"("manifold": "plane")",
                                        R"("manifold": "nowhere")"),
                               "nowhere"));
  CHECK(parse_fails_mentioning(
      replaced(R"("target": "plane")", R"("target": "elsewhere")"),
      "elsewhere"));
}

TEST_CASE("component shape mismatches are rejected") {
  CHECK(parse_fails_mentioning(
      replaced(R"("components": ["x1", "x2"])", R"("components": ["x1"])"),
      "components"));
}

TEST_CASE("duplicate names are rejected") {
  std::string text = replaced(
      R"("maps": [)",
      R"("maps": [
    {"name": "ident", "source": "plane", "target": "plane",
     "components": ["x1", "x2"]},
  )");
  CHECK(parse_fails_mentioning(text, "ident"));
}

TEST_CASE("bad expressions surface the JSON path") {
  CHECK(parse_fails_mentioning(
      replaced(R"(["x1", "x2"])", R"(["x1 +", "x2"])"), "components"));
}
