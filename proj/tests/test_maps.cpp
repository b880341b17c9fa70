#include <doctest.h>

#include <cmath>

#include "golden/catalog.hpp"
#include "golden/maps.hpp"
#include "golden/sampling.hpp"

using namespace golden;

namespace {

const Catalog& cat() {
  static Catalog c = builtin_catalog();
  return c;
}

Vec pt2(double a, double b) {
  Vec p(2);
  p << a, b;
  return p;
}

std::vector<Vec> box_points(const ManifoldSpec& M, int count,
                            const char* label) {
  Rng rng(mix_seed(kDefaultSeed, label));
  return sample_points(M.sample_box, count, rng);
}

}  // namespace

TEST_CASE("map jet of the exponential graph map") {
  const CatalogMap& m = *cat().map("exp-euclid2");
  Vec p = pt2(0.4, -0.3);
  MapJet j = map_jet_at(m.spec, p);
  CHECK(j.value(0) == doctest::Approx(0.4));
  CHECK(j.value(1) == doctest::Approx(std::exp(-0.3)));
  CHECK(j.jac(0, 0) == doctest::Approx(1.0));
  CHECK(j.jac(0, 1) == doctest::Approx(0.0));
  CHECK(j.jac(1, 0) == doctest::Approx(0.0));
  CHECK(j.jac(1, 1) == doctest::Approx(std::exp(-0.3)));
  CHECK(j.hess[1](1, 1) == doctest::Approx(std::exp(-0.3)));
  CHECK(j.hess[0].cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("second fundamental form on flat charts is the Hessian") {
  const ManifoldSpec& E = *cat().manifold("euclid2");
  const CatalogMap& m = *cat().map("exp-euclid2");
  Vec p = pt2(-0.2, 0.1);
  Vec e2 = Vec::Unit(2, 1);
  Vec got = second_fundamental_form_at(E, E, m.spec, e2, e2, p);
  CHECK(got(0) == doctest::Approx(0.0));
  CHECK(got(1) == doctest::Approx(std::exp(0.1)));
}

TEST_CASE("identity maps have vanishing second fundamental form") {
  for (const char* name : {"id-euclid2", "id-hyper2", "id-warped2",
                           "id-heisen4"}) {
    const CatalogMap& m = *cat().map(name);
    const ManifoldSpec& M = *cat().manifold(m.spec.source);
    for (const Vec& p : box_points(M, 6, name)) {
      Rng rng(mix_seed(kDefaultSeed, std::string("sff:") + name));
      Vec x(M.dim), y(M.dim);
      for (int i = 0; i < M.dim; ++i) {
        x(i) = rng.uniform(-1, 1);
        y(i) = rng.uniform(-1, 1);
      }
      Vec got = second_fundamental_form_at(M, M, m.spec, x, y, p);
      CHECK(got.cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("tension of the exponential graph map") {
  const ManifoldSpec& E = *cat().manifold("euclid2");
  const CatalogMap& m = *cat().map("exp-euclid2");
  for (const Vec& p : box_points(E, 10, "tension-exp")) {
    TensionResult t = tension_at(E, E, m.spec, p);
    CHECK(std::abs(t.tension(0)) < 1e-12);
    CHECK(t.tension(1) == doctest::Approx(std::exp(p(1))).epsilon(1e-10));
  }
}

TEST_CASE("intertwining class of the exponential graph map") {
  const ManifoldSpec& E = *cat().manifold("euclid2");
  const CatalogMap& m = *cat().map("exp-euclid2");
  const StructureField& P = cat().structure("euclid2-P")->field;
  IntertwiningClass cls = intertwining_class(
      E, E, m.spec, P, P, box_points(E, 12, "cls-exp"), 1e-8);
  CHECK(cls.lambda == 1);
  CHECK(!cls.conflict);
  CHECK(cls.find("para")->holds);
  CHECK(cls.find("golden")->holds);
  CHECK(!cls.find("anti_para")->holds);
  CHECK(!cls.find("anti_golden")->holds);
  for (const auto& rel : cls.relations)
    if (rel.cross) CHECK(!rel.holds);
  CHECK(cls.max_jacobian > 0.9);
  CHECK(!constancy_diagnostic(cls).fired);
}

TEST_CASE("structure reversing swap on the hyperbolic plane") {
  const ManifoldSpec& H = *cat().manifold("hyper2");
  const CatalogMap& m = *cat().map("swap-hyper2");
  const StructureField& P = cat().structure("hyper2-P")->field;
  IntertwiningClass cls = intertwining_class(
      H, H, m.spec, P, P, box_points(H, 12, "cls-swap"), 1e-8);
  CHECK(cls.lambda == -1);
  CHECK(cls.find("anti_para")->holds);
  CHECK(!cls.find("para")->holds);
}

TEST_CASE("constant maps satisfy every relation without a diagnostic") {
  const ManifoldSpec& E = *cat().manifold("euclid2");
  const CatalogMap& m = *cat().map("const-euclid2");
  const StructureField& P = cat().structure("euclid2-P")->field;
  IntertwiningClass cls = intertwining_class(
      E, E, m.spec, P, P, box_points(E, 8, "cls-const"), 1e-8);
  for (const auto& rel : cls.relations) CHECK(rel.holds);
  CHECK(cls.max_jacobian < 1e-14);
  CHECK(!constancy_diagnostic(cls).fired);
}

TEST_CASE("constancy diagnostic fires when cross relations pass loosely") {
  // With an absurd tolerance the mixed relations all hold on a map whose
  // differential is plainly nonzero; that combination must be flagged.
  const ManifoldSpec& E = *cat().manifold("euclid2");
  const CatalogMap& m = *cat().map("exp-euclid2");
  const StructureField& P = cat().structure("euclid2-P")->field;
  IntertwiningClass cls = intertwining_class(
      E, E, m.spec, P, P, box_points(E, 8, "cls-loose"), 10.0);
  ConstancyDiagnostic d = constancy_diagnostic(cls);
  CHECK(d.fired);
  CHECK(!d.holding_cross_relations.empty());
  CHECK(d.max_jacobian > 0.9);
  CHECK(!d.message.empty());
}

TEST_CASE("golden relation residuals scale the product residuals") {
  // A shear does not intertwine the reflections; its golden defect must be
  // exactly (sqrt5 / 2) times its para defect.
  const ManifoldSpec& E = *cat().manifold("euclid2");
  const StructureField& P = cat().structure("euclid2-P")->field;
  SmoothMapSpec shear;
  shear.name = "shear";
  shear.source = "euclid2";
  shear.target = "euclid2";
  shear.components = {
      parse_expression("x1 + 0.5*x2^2", E.coordinate_names),
      parse_expression("x2", E.coordinate_names)};
  IntertwiningClass cls = intertwining_class(
      E, E, shear, P, P, box_points(E, 10, "cls-shear"), 1e-8);
  double para = cls.find("para")->residual;
  double golden = cls.find("golden")->residual;
  CHECK(para > 1e-3);
  CHECK(golden == doctest::Approx(0.5 * kSqrt5 * para).epsilon(1e-12));
}

TEST_CASE("commutation of the second fundamental form with reflections") {
  const ManifoldSpec& E = *cat().manifold("euclid2");
  const CatalogMap& m = *cat().map("exp-euclid2");
  const StructureField& P = cat().structure("euclid2-P")->field;
  Rng rng(mix_seed(kDefaultSeed, "test-commutation"));
  for (const Vec& p : box_points(E, 6, "commutation")) {
    Vec x = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    Vec y = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    CHECK(second_form_commutation_residual_at(E, E, m.spec, P, P, 1, x, y, p) <
          1e-9);
  }
}

TEST_CASE("adapted frame spans on the hyperbolic plane") {
  const ManifoldSpec& H = *cat().manifold("hyper2");
  const StructureField& P = cat().structure("hyper2-P")->field;
  std::vector<Vec> frame = adapted_hyperbolic_frame_at(H, P, pt2(0.2, -0.7));
  REQUIRE(frame.size() == 1);
  // e and Pe together form a pseudo orthonormal basis: h(e,e) = 1,
  // h(Pe,Pe) = -1, independent legs.
  Mat h = metric_value_at(H, pt2(0.2, -0.7));
  Mat Pv = endo_value_at(P.endo, pt2(0.2, -0.7));
  Vec e = frame[0];
  Vec pe = Pv * e;
  CHECK(e.dot(h * e) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(pe.dot(h * pe) == doctest::Approx(-1.0).epsilon(1e-10));
  Mat span(2, 2);
  span.col(0) = e;
  span.col(1) = pe;
  CHECK(std::abs(span.determinant()) > 1e-6);
}

TEST_CASE("harmonicity of the hyperbolic identity with its split") {
  const ManifoldSpec& H = *cat().manifold("hyper2");
  const CatalogMap& m = *cat().map("id-hyper2");
  const StructureField& P = cat().structure("hyper2-P")->field;
  HarmonicityHypotheses hyp;
  hyp.source_semi_decomposable = true;
  hyp.target_vidal_plus = true;
  hyp.target_vidal_minus = true;
  HarmonicityReport rep =
      harmonicity_report(H, H, m.spec, &P, &P, 1, hyp,
                         box_points(H, 10, "harmonic-id"), 1e-8);
  CHECK(rep.harmonic);
  CHECK(rep.split_everywhere);
  CHECK(rep.plus_harmonic);
  CHECK(rep.minus_harmonic);
  CHECK(rep.equivalence_applicable);
  CHECK(rep.equivalence_holds);
}

TEST_CASE("tension split recombines") {
  const ManifoldSpec& E = *cat().manifold("euclid2");
  const CatalogMap& m = *cat().map("exp-euclid2");
  const StructureField& P = cat().structure("euclid2-P")->field;
  for (const Vec& p : box_points(E, 8, "split")) {
    TensionResult t = tension_at(E, E, m.spec, p, &P, &P, 1);
    REQUIRE(t.split_available);
    CHECK((t.tension - (t.d_tension_plus + t.d_tension_minus))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("closed tension formula for hyperbolic sources") {
  const ManifoldSpec& H = *cat().manifold("hyper2");
  const StructureField& P = cat().structure("hyper2-P")->field;
  for (const char* name : {"id-hyper2", "swap-hyper2"}) {
    const CatalogMap& m = *cat().map(name);
    int lambda = (std::string(name) == "swap-hyper2") ? -1 : 1;
    for (const Vec& p : box_points(H, 6, name)) {
      CHECK(tension_structure_residual_at(H, H, m.spec, P, P, lambda, p) <
            1e-9);
    }
  }
}
