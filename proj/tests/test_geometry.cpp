#include <doctest.h>

#include <cmath>

#include "golden/catalog.hpp"
#include "golden/geometry.hpp"

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

Vec pt4(double a, double b, double c, double d) {
  Vec p(4);
  p << a, b, c, d;
  return p;
}

}  // namespace

TEST_CASE("warped plane Christoffel symbols") {
  // h = dx1^2 + exp(2 x1) dx2^2 gives Gamma^1_22 = -exp(2 x1) and
  // Gamma^2_12 = Gamma^2_21 = 1, everything else zero.
  const ManifoldSpec& M = *cat().manifold("warped2");
  Vec p = pt2(0.3, -0.4);
  Christoffel ch = christoffel_at(M, p);
  const double e2x = std::exp(2 * 0.3);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double want = 0.0;
        if (k == 0 && i == 1 && j == 1) want = -e2x;
        if (k == 1 && i != j) want = 1.0;
        CHECK(ch.g[k](i, j) == doctest::Approx(want).epsilon(1e-10));
      }
}

TEST_CASE("nilpotent group metric inverse and Christoffel symbols") {
  const ManifoldSpec& M = *cat().manifold("heisen4");
  Vec p = pt4(0.7, -0.2, 0.5, 0.1);
  PointGeometry G = point_geometry_at(M, p);
  CHECK((G.h * G.hinv - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  Mat want_hinv(4, 4);
  want_hinv << 0, 0, 1, 0,
               0, 0, 0, 1,
               1, 0, 0, 0.7,
               0, 1, 0.7, 0;
  CHECK((G.hinv - want_hinv).cwiseAbs().maxCoeff() < 1e-12);
  // The only nonzero symbol is Gamma^4_11 = -1.
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double want = (k == 3 && i == 0 && j == 0) ? -1.0 : 0.0;
        CHECK(G.gamma.g[k](i, j) == doctest::Approx(want).epsilon(1e-10));
      }
}

TEST_CASE("lie bracket of affine fields") {
  // [a + Ax, b + Bx] = B(a + Ax) - A(b + Bx), checked against the
  // symbolic evaluation.
  const ManifoldSpec& M = *cat().manifold("euclid2");
  Vec a = pt2(0.2, -0.5), b = pt2(1.0, 0.3);
  Mat A(2, 2), B(2, 2);
  A << 0.5, -1.0, 0.25, 0.75;
  B << -0.3, 0.1, 0.9, 0.4;
  VectorFieldSpec X = affine_field(a, A);
  VectorFieldSpec Y = affine_field(b, B);
  Vec p = pt2(-0.6, 0.45);
  Vec got = lie_bracket_at(X, Y, p);
  Vec want = B * (a + A * p) - A * (b + B * p);
  CHECK((got - want).cwiseAbs().maxCoeff() < 1e-12);
  (void)M;
}

TEST_CASE("orthonormal frames against the metric") {
  for (const char* name : {"euclid2", "warped2"}) {
    const ManifoldSpec& M = *cat().manifold(name);
    Vec p = pt2(0.4, -0.2);
    Mat h = metric_value_at(M, p);
    FrameAt f = orthonormal_frame_at(M, p);
    for (std::size_t i = 0; i < f.vectors.size(); ++i)
      for (std::size_t j = 0; j < f.vectors.size(); ++j) {
        double want = (i == j) ? static_cast<double>(f.signs[i]) : 0.0;
        CHECK(f.vectors[i].dot(h * f.vectors[j]) ==
              doctest::Approx(want).epsilon(1e-10));
      }
  }
}

TEST_CASE("metric signatures") {
  CHECK(signature_at(*cat().manifold("euclid2"), pt2(0, 0)) ==
        std::make_pair(2, 0));
  CHECK(signature_at(*cat().manifold("hyper2"), pt2(0.3, 0.3)) ==
        std::make_pair(1, 1));
  CHECK(signature_at(*cat().manifold("warped2"), pt2(0.2, -0.8)) ==
        std::make_pair(2, 0));
  CHECK(signature_at(*cat().manifold("heisen4"), pt4(0.9, 0, -0.5, 0.2)) ==
        std::make_pair(2, 2));
}

TEST_CASE("divergence of the product structure tensor") {
  const CatalogStructure& wp = *cat().structure("warped2-P");
  const ManifoldSpec& W = *cat().manifold("warped2");
  Vec dw = divergence_endo_at(W, wp.field.endo, pt2(0.1, 0.6));
  CHECK(dw(0) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(dw(1) == doctest::Approx(0.0).epsilon(1e-9));

  const CatalogStructure& hp = *cat().structure("heisen4-P");
  const ManifoldSpec& H = *cat().manifold("heisen4");
  Vec dh = divergence_endo_at(H, hp.field.endo, pt4(0.7, -0.2, 0.5, 0.1));
  CHECK(dh.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("covariant derivative of the warped structure tensor") {
  const CatalogStructure& wp = *cat().structure("warped2-P");
  const ManifoldSpec& W = *cat().manifold("warped2");
  Vec p = pt2(0.25, -0.3);
  const double e2x = std::exp(2 * 0.25);
  VectorFieldSpec d1 = coordinate_field(2, 0);
  VectorFieldSpec d2 = coordinate_field(2, 1);
  // nabla_{d1} P = 0; (nabla_{d2} P) d2 = (2 e^{2x1}, 0);
  // (nabla_{d2} P) d1 = (0, 2).
  CHECK(covariant_derivative_endo_at(W, wp.field.endo, d1, d2, p)
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  Vec d22 = covariant_derivative_endo_at(W, wp.field.endo, d2, d2, p);
  CHECK((d22 - pt2(2.0 * e2x, 0.0)).cwiseAbs().maxCoeff() < 1e-9);
  Vec d21 = covariant_derivative_endo_at(W, wp.field.endo, d2, d1, p);
  CHECK((d21 - pt2(0.0, 2.0)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("gram schmidt pivots and degeneracy") {
  Mat h = Mat::Identity(2, 2);
  GramSchmidtResult r =
      gram_schmidt(h, {pt2(2.0, 0.0), pt2(1.0, 1.0)});
  REQUIRE(r.complete);
  REQUIRE(r.vectors.size() == 2);
  CHECK(r.signs[0] == 1);
  CHECK(r.signs[1] == 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(r.vectors[i].dot(h * r.vectors[j]) ==
            doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));

  // A null direction of the hyperbolic plane metric has no pivot.
  Mat hh(2, 2);
  hh << 0, 1, 1, 0;
  GramSchmidtResult n = gram_schmidt(hh, {pt2(1.0, 0.0)});
  CHECK(!n.complete);
}

TEST_CASE("field jets of affine data are exact") {
  Vec a = pt2(0.5, -1.0);
  Mat B(2, 2);
  B << 2.0, 3.0, -1.0, 0.5;
  FieldJet j = field_jet_at(affine_field(a, B), pt2(0.3, 0.7));
  CHECK((j.value - (a + B * pt2(0.3, 0.7))).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((j.jac - B).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("degenerate metrics are rejected") {
  ManifoldSpec M;
  M.name = "broken";
  M.dim = 2;
  M.coordinate_names = {"x1", "x2"};
  M.sample_box = {Interval{-1, 1}, Interval{-1, 1}};
  M.metric = {
      {parse_expression("0", M.coordinate_names),
       parse_expression("0", M.coordinate_names)},
      {parse_expression("0", M.coordinate_names),
       parse_expression("1", M.coordinate_names)}};
  CHECK_THROWS_AS(validate_metric_at(M, pt2(0.0, 0.0)), GeometryError);
}
