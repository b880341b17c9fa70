#include <doctest.h>

#include "golden/catalog.hpp"
#include "golden/classifier.hpp"

using namespace golden;

namespace {

const Catalog& cat() {
  static Catalog c = builtin_catalog();
  return c;
}

ClassificationReport classify_entry(const char* name, int points) {
  const CatalogStructure& s = *cat().structure(name);
  const ManifoldSpec& M = *cat().manifold(s.manifold);
  Rng rng(mix_seed(kDefaultSeed, std::string("test-points:") + name));
  ClassifyOptions opt;
  opt.fields_per_point = 8;
  ClassificationReport rep =
      classify(M, s.field, sample_points(M.sample_box, points, rng), opt);
  rep.structure = name;
  return rep;
}

bool verdict(const ClassificationReport& r, const char* flag) {
  const FlagEntry* f = r.find(flag);
  REQUIRE(f != nullptr);
  REQUIRE(f->evaluable);
  return f->verdict;
}

}  // namespace

TEST_CASE("warped plane classification") {
  ClassificationReport r = classify_entry("warped2-P", 25);
  CHECK(verdict(r, "pure"));
  CHECK(!verdict(r, "hyperbolic"));
  CHECK(verdict(r, "integrable"));
  CHECK(!verdict(r, "parallel"));
  CHECK(!verdict(r, "nearly"));
  CHECK(!verdict(r, "quasi"));
  CHECK(!verdict(r, "semi"));
  CHECK(!verdict(r, "semi_decomposable"));
  CHECK(verdict(r, "minimal_plus"));
  CHECK(!verdict(r, "minimal_minus"));
  CHECK(coherence_violations(r).empty());
}

TEST_CASE("nilpotent group classification") {
  ClassificationReport r = classify_entry("heisen4-P", 15);
  CHECK(verdict(r, "hyperbolic"));
  CHECK(!verdict(r, "integrable"));
  CHECK(!verdict(r, "parallel"));
  CHECK(verdict(r, "quasi"));
  CHECK(verdict(r, "semi"));
  CHECK(!verdict(r, "vidal_plus"));
  CHECK(verdict(r, "vidal_minus"));
  const FlagEntry* mp = r.find("minimal_plus");
  REQUIRE(mp != nullptr);
  CHECK(!mp->evaluable);
  CHECK(coherence_violations(r).empty());
}

TEST_CASE("flat golden classification") {
  ClassificationReport r = classify_entry("euclid2-G", 15);
  CHECK(verdict(r, "pure"));
  CHECK(verdict(r, "parallel"));
  CHECK(verdict(r, "integrable"));
  CHECK(verdict(r, "locally_golden"));
  CHECK(coherence_violations(r).empty());
}

TEST_CASE("coherence violations are detected on inconsistent reports") {
  ClassificationReport rep;
  rep.kind = StructureKind::Product;
  rep.flags.push_back({"parallel", 0.0, true, true, "", ""});
  rep.flags.push_back({"integrable", 1.0, false, true, "", ""});
  CHECK(!coherence_violations(rep).empty());
}
