#include <doctest.h>

#include <cmath>

#include "golden/catalog.hpp"
#include "golden/operators.hpp"
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

Vec pt4(double a, double b, double c, double d) {
  Vec p(4);
  p << a, b, c, d;
  return p;
}

}  // namespace

TEST_CASE("Nijenhuis tensor on the nilpotent group") {
  const ManifoldSpec& H = *cat().manifold("heisen4");
  const StructureField& P = cat().structure("heisen4-P")->field;
  Vec p = pt4(0.3, -0.6, 0.2, 0.8);
  Vec want(4);
  want << 0, 0, 4, 0;
  Vec via_brackets =
      nijenhuis_at(P, coordinate_field(4, 0), coordinate_field(4, 1), p);
  CHECK((via_brackets - want).cwiseAbs().maxCoeff() < 1e-10);
  Vec via_connection =
      nijenhuis_connection_at(H, P, Vec::Unit(4, 0), Vec::Unit(4, 1), p);
  CHECK((via_connection - want).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Nijenhuis tensor vanishes on flat diagonal structures") {
  const StructureField& P = cat().structure("euclid2-P")->field;
  Rng rng(mix_seed(kDefaultSeed, "test-nijenhuis-flat"));
  for (int i = 0; i < 5; ++i) {
    VectorFieldSpec X = random_affine_field(2, rng);
    VectorFieldSpec Y = random_affine_field(2, rng);
    Vec p = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    CHECK(nijenhuis_at(P, X, Y, p).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("S operator value on the warped plane") {
  const ManifoldSpec& W = *cat().manifold("warped2");
  const StructureField& P = cat().structure("warped2-P")->field;
  Vec p = pt2(0.15, 0.4);
  Vec got = s_operator_at(W, P, Vec::Unit(2, 1), Vec::Unit(2, 0), p);
  CHECK((got - pt2(0.0, 4.0)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Tachibana derivative of the metric is tensorial in all slots") {
  // Two extensions of the same pointwise vectors, one constant and one
  // with a random linear part, must give the same value.
  const ManifoldSpec& W = *cat().manifold("warped2");
  const StructureField& P = cat().structure("warped2-P")->field;
  Rng rng(mix_seed(kDefaultSeed, "test-tachibana-tensorial"));
  Vec p = pt2(-0.2, 0.55);
  for (int i = 0; i < 4; ++i) {
    Vec xv = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    Vec yv = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    Vec zv = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    Mat A(2, 2), B(2, 2), C(2, 2);
    A << rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
        rng.uniform(-1, 1);
    B << rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
        rng.uniform(-1, 1);
    C << rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
        rng.uniform(-1, 1);
    double constant_ext =
        tachibana_metric_at(W, P, constant_field(xv), constant_field(yv),
                            constant_field(zv), p);
    double affine_ext = tachibana_metric_at(
        W, P, affine_field(Vec(xv - A * p), A), affine_field(Vec(yv - B * p), B),
        affine_field(Vec(zv - C * p), C), p);
    CHECK(constant_ext == doctest::Approx(affine_ext).epsilon(1e-9));
  }
}

TEST_CASE("symmetrized derivative against its covariant form") {
  const ManifoldSpec& W = *cat().manifold("warped2");
  const StructureField& P = cat().structure("warped2-P")->field;
  Rng rng(mix_seed(kDefaultSeed, "test-psi-form"));
  for (int i = 0; i < 5; ++i) {
    Vec p = pt2(rng.uniform(-0.5, 0.5), rng.uniform(-1, 1));
    StructureContext ctx = structure_context_at(W, P, p);
    Vec xv = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    Vec yv = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    Vec zv = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    double psi = psi_metric_at(W, P, constant_field(xv), constant_field(yv),
                               constant_field(zv), p);
    double form =
        2.0 * contract_endo_derivative(ctx.nabla, yv, xv).dot(ctx.geom.h * zv);
    CHECK(psi == doctest::Approx(form).epsilon(1e-9));
  }
}

TEST_CASE("form derivative against coordinate finite differences") {
  // dOmega(di,dj,dk) telescopes to d_i Omega_jk - d_j Omega_ik + d_k
  // Omega_ij; the Christoffel contributions cancel in pairs.
  const ManifoldSpec& H = *cat().manifold("heisen4");
  const StructureField& P = cat().structure("heisen4-P")->field;
  Vec p = pt4(0.25, -0.4, 0.6, -0.1);
  const double step = 1e-6;
  auto omega = [&](const Vec& q, int j, int k) {
    Mat h = metric_value_at(H, q);
    Mat Pv = endo_value_at(P.endo, q);
    return (Pv.transpose() * h)(j, k);
  };
  int triples[][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 1}};
  for (auto& t : triples) {
    int i = t[0], j = t[1], k = t[2];
    auto partial = [&](int dir, int a, int b) {
      Vec qp = p, qm = p;
      qp(dir) += step;
      qm(dir) -= step;
      return (omega(qp, a, b) - omega(qm, a, b)) / (2 * step);
    };
    double fd = partial(i, j, k) - partial(j, i, k) + partial(k, i, j);
    double got = d_omega_at(H, P, Vec::Unit(4, i), Vec::Unit(4, j),
                            Vec::Unit(4, k), p);
    CHECK(got == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("Lie derivative of the structure tensor along a coordinate field") {
  const StructureField& P = cat().structure("heisen4-P")->field;
  Mat L = lie_derivative_endo_at(P, coordinate_field(4, 0),
                                 pt4(0.3, 0.1, -0.2, 0.5));
  // Constant direction field: the Lie derivative reduces to d_1 P, whose
  // only nonzero entry is at row 3, column 2 (value 2).
  Mat want = Mat::Zero(4, 4);
  want(2, 1) = 2.0;
  CHECK((L - want).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("twin scaling of connection Nijenhuis forms") {
  const ManifoldSpec& H = *cat().manifold("heisen4");
  const CatalogStructure& sp = *cat().structure("heisen4-P");
  const CatalogStructure& sg = *cat().structure("heisen4-G");
  Rng rng(mix_seed(kDefaultSeed, "test-twin-ratio"));
  for (int i = 0; i < 5; ++i) {
    Vec p = pt4(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                rng.uniform(-1, 1));
    Vec x = pt4(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                rng.uniform(-1, 1));
    Vec y = pt4(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                rng.uniform(-1, 1));
    Vec np = nijenhuis_connection_at(H, sp.field, x, y, p);
    Vec ng = nijenhuis_connection_at(H, sg.field, x, y, p);
    CHECK((5.0 * np - 4.0 * ng).cwiseAbs().maxCoeff() < 1e-10);
  }
}
