#include <doctest.h>

#include <algorithm>
#include <string>

#include "golden/report.hpp"
#include "golden/verify.hpp"

using namespace golden;

namespace {

WorkspaceConfig small_workspace() {
  WorkspaceConfig ws = default_workspace();
  ws.sampling.points = 12;
  ws.sampling.fields_per_point = 4;
  return ws;
}

// The residual recorded for one entry inside a suite detail string.
std::string entry_chunk(const SuiteResult& r, const std::string& entry) {
  auto at = r.detail.find(entry + " ");
  if (at == std::string::npos) return "";
  auto end = r.detail.find(';', at);
  return r.detail.substr(at, end == std::string::npos ? end : end - at);
}

}  // namespace

TEST_CASE("all suites pass on the built-in catalog") {
  WorkspaceConfig ws = small_workspace();
  VerifyOptions opt;
  opt.plan = ws.sampling;
  std::vector<SuiteResult> rs = run_verify(ws, opt);
  REQUIRE(rs.size() == suite_names().size());
  for (const auto& r : rs) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
    CHECK(r.evaluable);
  }
  CHECK(all_pass(rs));
}

TEST_CASE("suite registry is sorted and selectable") {
  std::vector<std::string> names = suite_names();
  CHECK(std::is_sorted(names.begin(), names.end()));

  WorkspaceConfig ws = small_workspace();
  VerifyOptions opt;
  opt.plan = ws.sampling;
  opt.suites = {"twin-algebra"};
  std::vector<SuiteResult> rs = run_verify(ws, opt);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].name == "twin-algebra");

  opt.suites = {"no-such-suite"};
  CHECK_THROWS_AS(run_verify(ws, opt), ConfigError);
}

TEST_CASE("catalog filters leave untouched residuals unchanged") {
  WorkspaceConfig ws = small_workspace();
  VerifyOptions all_opt;
  all_opt.plan = ws.sampling;
  all_opt.suites = {"s-operator-product"};
  std::vector<SuiteResult> full = run_verify(ws, all_opt);

  VerifyOptions part_opt = all_opt;
  part_opt.entries = {"warped2"};
  std::vector<SuiteResult> part = run_verify(ws, part_opt);

  REQUIRE(full.size() == 1);
  REQUIRE(part.size() == 1);
  std::string full_chunk = entry_chunk(full[0], "warped2-P");
  std::string part_chunk = entry_chunk(part[0], "warped2-P");
  CHECK(!full_chunk.empty());
  CHECK(full_chunk == part_chunk);
  CHECK(part[0].scope == "warped2-P");
}

TEST_CASE("filters that exclude everything mark suites not evaluable") {
  WorkspaceConfig ws = small_workspace();
  VerifyOptions opt;
  opt.plan = ws.sampling;
  opt.suites = {"nijenhuis-heisen4-value"};
  opt.entries = {"euclid2"};
  std::vector<SuiteResult> rs = run_verify(ws, opt);
  REQUIRE(rs.size() == 1);
  CHECK(!rs[0].evaluable);
  CHECK(rs[0].pass);
}

TEST_CASE("verify reports are byte identical across runs") {
  WorkspaceConfig ws = small_workspace();
  VerifyOptions opt;
  opt.plan = ws.sampling;
  std::string a = render_verify_json(run_verify(ws, opt), ws.sampling);
  std::string b = render_verify_json(run_verify(ws, opt), ws.sampling);
  CHECK(a == b);
  CHECK(a.find("\"all-pass\": true") != std::string::npos);
}

TEST_CASE("classify command helper") {
  WorkspaceConfig ws = small_workspace();
  CHECK_THROWS_AS(run_classify(ws, "nope", ws.sampling, 1e-8), ConfigError);
  ClassificationReport rep =
      run_classify(ws, "euclid2-P", ws.sampling, ws.tolerances.flag);
  CHECK(rep.structure == "euclid2-P");
  CHECK(rep.manifold == "euclid2");
  const FlagEntry* parallel = rep.find("parallel");
  REQUIRE(parallel != nullptr);
  CHECK(parallel->verdict);
  std::string j1 = render_classify_json(rep, ws.sampling);
  std::string j2 = render_classify_json(
      run_classify(ws, "euclid2-P", ws.sampling, ws.tolerances.flag),
      ws.sampling);
  CHECK(j1 == j2);
}

TEST_CASE("check-map command helper") {
  WorkspaceConfig ws = small_workspace();
  CHECK_THROWS_AS(run_check_map(ws, "nope", ws.sampling, 1e-8), ConfigError);
  MapCheckReport rep =
      run_check_map(ws, "exp-euclid2", ws.sampling, ws.tolerances.cross_check);
  CHECK(rep.relations_available);
  CHECK(rep.cls.lambda == 1);
  CHECK(!rep.constancy.fired);
  CHECK(!rep.harmonicity.harmonic);
  CHECK(rep.harmonicity.equivalence_applicable);
  CHECK(rep.harmonicity.equivalence_holds);
  std::string text = render_check_map_text(rep);
  CHECK(text.find("exp-euclid2") != std::string::npos);
  std::string json = render_check_map_json(rep, ws.sampling);
  CHECK(json.find("\"lambda\": 1") != std::string::npos);
}
