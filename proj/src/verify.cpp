#include "golden/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace golden {

namespace {

std::string fmt(double r) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << r;
  return os.str();
}

double maxabs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }
double maxabs(const Mat& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

Vec random_vec(int n, Rng& rng) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.uniform(-1.0, 1.0);
  return v;
}

/// Catalog filter: a structure qualifies under its own name or its
/// manifold's; a map under its name or either chart's.
struct Filter {
  std::vector<std::string> names;

  bool allows(std::initializer_list<std::string> keys) const {
    if (names.empty()) return true;
    for (const auto& n : names) {
      if (n == "all") return true;
      for (const auto& k : keys)
        if (n == k) return true;
    }
    return false;
  }
};

SuiteResult base_result(const std::string& name, double tol) {
  SuiteResult r;
  r.name = name;
  r.tolerance = tol;
  return r;
}

void cover(SuiteResult& r, const std::string& entry, double residual,
           const std::string& extra = "") {
  r.max_residual = std::max(r.max_residual, residual);
  if (!r.scope.empty()) r.scope += ", ";
  r.scope += entry;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += entry + " " + fmt(residual);
  if (!extra.empty()) r.detail += " (" + extra + ")";
}

SuiteResult finish(SuiteResult r) {
  if (r.scope.empty()) {
    r.evaluable = false;
    r.pass = true;
    r.detail = "no catalog entries in scope";
    return r;
  }
  r.pass = r.max_residual < r.tolerance;
  return r;
}

std::vector<Vec> suite_points(const ManifoldSpec& M, const SamplePlan& plan,
                              const std::string& suite,
                              const std::string& entry, Rng& rng) {
  rng = Rng(mix_seed(plan.seed, "verify:" + suite + ":" + entry));
  return sample_points(M.sample_box, plan.points, rng);
}

const CatalogStructure* product_structure_for(const Catalog& cat,
                                              const std::string& manifold) {
  for (const auto& s : cat.structures)
    if (s.manifold == manifold && s.field.kind == StructureKind::Product)
      return &s;
  return nullptr;
}

bool flag_verdict(const ClassificationReport& r, const std::string& name) {
  const FlagEntry* f = r.find(name);
  return f != nullptr && f->verdict;
}

ClassifyOptions classify_options(const WorkspaceConfig& ws,
                                 const SamplePlan& plan) {
  ClassifyOptions opt;
  opt.tol = ws.tolerances.flag;
  opt.fields_per_point = plan.fields_per_point;
  opt.seed = plan.seed;
  return opt;
}

/// Classify a structure on its own deterministic point stream, independent
/// of which suite or command asked.
ClassificationReport classify_entry(const WorkspaceConfig& ws,
                                    const SamplePlan& plan,
                                    const CatalogStructure& s) {
  const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
  Rng rng(mix_seed(plan.seed, "points:" + M->name));
  std::vector<Vec> pts = sample_points(M->sample_box, plan.points, rng);
  ClassificationReport rep =
      classify(*M, s.field, pts, classify_options(ws, plan));
  rep.structure = s.name;
  return rep;
}

HarmonicityHypotheses hypotheses_for(const WorkspaceConfig& ws,
                                     const SamplePlan& plan,
                                     const CatalogStructure& sM,
                                     const CatalogStructure& sN) {
  HarmonicityHypotheses hyp;
  ClassificationReport src = classify_entry(ws, plan, sM);
  ClassificationReport tgt = classify_entry(ws, plan, sN);
  hyp.source_semi_decomposable = flag_verdict(src, "semi_decomposable");
  hyp.target_vidal_plus = flag_verdict(tgt, "vidal_plus");
  hyp.target_vidal_minus = flag_verdict(tgt, "vidal_minus");
  return hyp;
}

// -- structure suites -------------------------------------------------------

SuiteResult suite_twin_algebra(const WorkspaceConfig& ws,
                               const SamplePlan& plan, const Filter& filter,
                               double tol) {
  SuiteResult out = base_result("twin-algebra", tol);
  for (const auto& s : ws.catalog.structures) {
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    StructureField T = twin_of(s.field);
    StructureField TT = twin_of(T);
    StructureField CT = conjugate_of(T);
    StructureField TC = twin_of(conjugate_of(s.field));
    Rng rng(0);
    double r = 0.0;
    for (const Vec& p : suite_points(*M, plan, "twin-algebra", s.name, rng)) {
      r = std::max(r, polynomial_residual_at(s.field, p));
      r = std::max(r, polynomial_residual_at(T, p));
      r = std::max(r, maxabs(Mat(endo_value_at(TT.endo, p) -
                                 endo_value_at(s.field.endo, p))));
      r = std::max(r, maxabs(Mat(endo_value_at(CT.endo, p) -
                                 endo_value_at(TC.endo, p))));
    }
    cover(out, s.name, r);
  }

  // The flat-plane twin must come out as the exact constant golden matrix,
  // not merely within tolerance.
  if (const CatalogStructure* s = ws.catalog.structure("euclid2-P")) {
    if (filter.allows({s->name, s->manifold})) {
      Vec origin = Vec::Zero(2);
      Mat tv = endo_value_at(twin_of(s->field).endo, origin);
      bool exact = tv(0, 0) == kGoldenRatio && tv(0, 1) == 0.0 &&
                   tv(1, 0) == 0.0 && tv(1, 1) == kGoldenRatioConj;
      cover(out, "euclid2-P exact twin", exact ? 0.0 : 1.0,
            exact ? "bitwise diag(sigma, sigbar)" : "not bitwise equal");
    }
  }
  return finish(out);
}

SuiteResult suite_twin_projectors(const WorkspaceConfig& ws,
                                  const SamplePlan& plan, const Filter& filter,
                                  double tol) {
  SuiteResult out = base_result("twin-projectors", tol);
  for (const auto& s : ws.catalog.structures) {
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    StructureField T = twin_of(s.field);
    int n = M->dim;
    Mat id = Mat::Identity(n, n);
    Rng rng(0);
    double r = 0.0;
    for (const Vec& p : suite_points(*M, plan, "twin-projectors", s.name, rng)) {
      Projectors pr = eigenprojectors_at(s.field, p);
      Projectors prT = eigenprojectors_at(T, p);
      Mat phi = endo_value_at(s.field.endo, p);
      r = std::max(r, maxabs(Mat(pr.plus + pr.minus - id)));
      r = std::max(r, maxabs(Mat(pr.plus * pr.plus - pr.plus)));
      r = std::max(r, maxabs(Mat(phi * pr.plus - s.field.eigen_plus() * pr.plus)));
      r = std::max(r,
                   maxabs(Mat(phi * pr.minus - s.field.eigen_minus() * pr.minus)));
      // Twins share their eigendistributions, so the projectors agree.
      r = std::max(r, maxabs(Mat(pr.plus - prT.plus)));
    }
    cover(out, s.name, r);
  }
  return finish(out);
}

SuiteResult suite_twin_ratio_nijenhuis(const WorkspaceConfig& ws,
                                       const SamplePlan& plan,
                                       const Filter& filter, double tol) {
  SuiteResult out = base_result("twin-ratio-nijenhuis", tol);
  for (const auto& s : ws.catalog.structures) {
    if (s.field.kind != StructureKind::Product) continue;
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    StructureField G = twin_of(s.field);
    Rng rng(0);
    double r = 0.0;
    for (const Vec& p :
         suite_points(*M, plan, "twin-ratio-nijenhuis", s.name, rng)) {
      for (int k = 0; k < plan.fields_per_point; ++k) {
        VectorFieldSpec X = random_affine_field(M->dim, rng);
        VectorFieldSpec Y = random_affine_field(M->dim, rng);
        Vec NP = nijenhuis_at(s.field, X, Y, p);
        Vec NG = nijenhuis_at(G, X, Y, p);
        r = std::max(r, maxabs(Vec(5.0 * NP - 4.0 * NG)));
      }
    }
    cover(out, s.manifold, r);
  }
  return finish(out);
}

SuiteResult suite_twin_ratio_derivative(const WorkspaceConfig& ws,
                                        const SamplePlan& plan,
                                        const Filter& filter, double tol) {
  SuiteResult out = base_result("twin-ratio-derivative", tol);
  for (const auto& s : ws.catalog.structures) {
    if (s.field.kind != StructureKind::Product) continue;
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    StructureField G = twin_of(s.field);
    Rng rng(0);
    double r = 0.0;
    for (const Vec& p :
         suite_points(*M, plan, "twin-ratio-derivative", s.name, rng)) {
      StructureContext cp = structure_context_at(*M, s.field, p);
      StructureContext cg = structure_context_at(*M, G, p);
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(M->dim, rng);
        Vec Y = random_vec(M->dim, rng);
        Vec dp = contract_endo_derivative(cp.nabla, X, Y);
        Vec dg = contract_endo_derivative(cg.nabla, X, Y);
        r = std::max(r, maxabs(Vec(kSqrt5 * dp - 2.0 * dg)));
      }
    }
    cover(out, s.manifold, r);
  }
  return finish(out);
}

SuiteResult suite_nijenhuis_cross(const WorkspaceConfig& ws,
                                  const SamplePlan& plan, const Filter& filter,
                                  double tol) {
  SuiteResult out = base_result("nijenhuis-cross", tol);
  for (const auto& s : ws.catalog.structures) {
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    bool golden = s.field.kind == StructureKind::Golden;
    StructureField base = golden ? twin_of(s.field) : s.field;
    Rng rng(0);
    double r = 0.0;
    for (const Vec& p : suite_points(*M, plan, "nijenhuis-cross", s.name, rng)) {
      StructureContext ctx = structure_context_at(*M, base, p);
      for (int k = 0; k < plan.fields_per_point; ++k) {
        VectorFieldSpec X = random_affine_field(M->dim, rng);
        VectorFieldSpec Y = random_affine_field(M->dim, rng);
        FieldJet Xj = field_jet_at(X, p);
        FieldJet Yj = field_jet_at(Y, p);
        Vec bracket = nijenhuis_at(s.field, X, Y, p);
        Vec conn = nijenhuis_connection_core(ctx, Xj.value, Yj.value);
        if (golden) conn *= 1.25;  // 5 N_P = 4 N_G on a twin pair
        r = std::max(r, maxabs(Vec(bracket - conn)));
      }
    }
    cover(out, s.name, r);
  }
  return finish(out);
}

SuiteResult suite_nijenhuis_heisen4_value(const WorkspaceConfig& ws,
                                          const SamplePlan& plan,
                                          const Filter& filter, double tol) {
  SuiteResult out = base_result("nijenhuis-heisen4-value", tol);
  const CatalogStructure* s = ws.catalog.structure("heisen4-P");
  if (s != nullptr && filter.allows({s->name, s->manifold})) {
    const ManifoldSpec* M = ws.catalog.manifold(s->manifold);
    VectorFieldSpec d1 = coordinate_field(4, 0);
    VectorFieldSpec d2 = coordinate_field(4, 1);
    Vec e1 = Vec::Unit(4, 0), e2 = Vec::Unit(4, 1);
    Vec want(4);
    want << 0, 0, 4, 0;
    Rng rng(0);
    double r = 0.0;
    for (const Vec& p :
         suite_points(*M, plan, "nijenhuis-heisen4-value", s->name, rng)) {
      StructureContext ctx = structure_context_at(*M, s->field, p);
      Vec bracket = nijenhuis_at(s->field, d1, d2, p);
      Vec conn = nijenhuis_connection_core(ctx, e1, e2);
      r = std::max(r, maxabs(Vec(bracket - want)));
      r = std::max(r, maxabs(Vec(conn - want)));
    }
    cover(out, s->name, r, "N(d1,d2) = 4 d3 on both routes");
  }
  return finish(out);
}

SuiteResult suite_form_derivative_identity(const WorkspaceConfig& ws,
                                           const SamplePlan& plan,
                                           const Filter& filter, double tol) {
  SuiteResult out = base_result("form-derivative-identity", tol);
  for (const auto& s : ws.catalog.structures) {
    if (s.field.kind != StructureKind::Product) continue;
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    Rng rng(0);
    std::vector<Vec> pts =
        suite_points(*M, plan, "form-derivative-identity", s.name, rng);
    if (!compatibility_at(*M, s.field, pts.front()).hyperbolic) continue;
    double r = 0.0;
    for (const Vec& p : pts) {
      StructureContext ctx = structure_context_at(*M, s.field, p);
      const Mat& h = ctx.geom.h;
      const Mat& P = ctx.phi.value;
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(M->dim, rng);
        Vec Y = random_vec(M->dim, rng);
        Vec Z = random_vec(M->dim, rng);
        Vec NP = nijenhuis_connection_core(ctx, Y, Z);
        double lhs = 2.0 * contract_endo_derivative(ctx.nabla, X, Y).dot(h * Z) +
                     3.0 * d_omega_core(ctx, X, Y, Z) +
                     3.0 * d_omega_core(ctx, X, Vec(P * Y), Vec(P * Z)) +
                     NP.dot(h * Vec(P * X));
        r = std::max(r, std::abs(lhs));
      }
    }
    cover(out, s.name, r);
  }
  return finish(out);
}

SuiteResult suite_psi_derivative_identity(const WorkspaceConfig& ws,
                                          const SamplePlan& plan,
                                          const Filter& filter, double tol) {
  SuiteResult out = base_result("psi-derivative-identity", tol);
  for (const auto& s : ws.catalog.structures) {
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    Rng rng(0);
    std::vector<Vec> pts =
        suite_points(*M, plan, "psi-derivative-identity", s.name, rng);
    if (!compatibility_at(*M, s.field, pts.front()).pure) continue;
    double r = 0.0;
    for (const Vec& p : pts) {
      StructureContext ctx = structure_context_at(*M, s.field, p);
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(M->dim, rng);
        Vec Y = random_vec(M->dim, rng);
        Vec Z = random_vec(M->dim, rng);
        double lhs = psi_metric_at(*M, s.field, constant_field(X),
                                   constant_field(Y), constant_field(Z), p);
        double rhs =
            2.0 * contract_endo_derivative(ctx.nabla, Y, X).dot(ctx.geom.h * Z);
        r = std::max(r, std::abs(lhs - rhs));
      }
    }
    cover(out, s.name, r);
  }
  return finish(out);
}

SuiteResult suite_tachibana_pure_form(const WorkspaceConfig& ws,
                                      const SamplePlan& plan,
                                      const Filter& filter, double tol) {
  SuiteResult out = base_result("tachibana-pure-form", tol);
  for (const auto& s : ws.catalog.structures) {
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    Rng rng(0);
    std::vector<Vec> pts =
        suite_points(*M, plan, "tachibana-pure-form", s.name, rng);
    if (!compatibility_at(*M, s.field, pts.front()).pure) continue;
    double r = 0.0;
    for (const Vec& p : pts) {
      StructureContext ctx = structure_context_at(*M, s.field, p);
      const Mat& h = ctx.geom.h;
      const auto& D = ctx.nabla;
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(M->dim, rng);
        Vec Y = random_vec(M->dim, rng);
        Vec Z = random_vec(M->dim, rng);
        double lhs = tachibana_metric_at(*M, s.field, constant_field(X),
                                         constant_field(Y), constant_field(Z), p);
        double rhs = -contract_endo_derivative(D, X, Y).dot(h * Z) +
                     contract_endo_derivative(D, Y, X).dot(h * Z) +
                     contract_endo_derivative(D, Z, X).dot(h * Y);
        r = std::max(r, std::abs(lhs - rhs));
      }
    }
    cover(out, s.name, r);
  }
  return finish(out);
}

SuiteResult suite_psi_parallel_vanishing(const WorkspaceConfig& ws,
                                         const SamplePlan& plan,
                                         const Filter& filter, double tol) {
  SuiteResult out = base_result("psi-parallel-vanishing", tol);
  for (const auto& s : ws.catalog.structures) {
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    Rng rng(0);
    std::vector<Vec> pts =
        suite_points(*M, plan, "psi-parallel-vanishing", s.name, rng);
    if (!compatibility_at(*M, s.field, pts.front()).pure) continue;
    double nab = 0.0;
    for (const Mat& d :
         structure_context_at(*M, s.field, pts.front()).nabla)
      nab = std::max(nab, maxabs(d));
    if (nab > 1e-10) continue;  // only parallel pure entries vanish here
    double r = 0.0;
    for (const Vec& p : pts) {
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(M->dim, rng);
        Vec Y = random_vec(M->dim, rng);
        Vec Z = random_vec(M->dim, rng);
        r = std::max(r, std::abs(psi_metric_at(*M, s.field, constant_field(X),
                                               constant_field(Y),
                                               constant_field(Z), p)));
        r = std::max(r, std::abs(tachibana_metric_at(
                            *M, s.field, constant_field(X), constant_field(Y),
                            constant_field(Z), p)));
      }
    }
    cover(out, s.name, r);
  }
  return finish(out);
}

SuiteResult suite_s_operator_product(const WorkspaceConfig& ws,
                                     const SamplePlan& plan,
                                     const Filter& filter, double tol) {
  SuiteResult out = base_result("s-operator-product", tol);
  for (const auto& s : ws.catalog.structures) {
    if (s.field.kind != StructureKind::Product) continue;
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    Rng rng(0);
    double r = 0.0;
    for (const Vec& p :
         suite_points(*M, plan, "s-operator-product", s.name, rng)) {
      StructureContext ctx = structure_context_at(*M, s.field, p);
      const Mat& P = ctx.phi.value;
      Projectors pr = projectors_from_value(s.field, P);
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(M->dim, rng);
        Vec Y = random_vec(M->dim, rng);
        Vec S1 = s_operator_core(ctx, X, Y);
        Vec alt = contract_endo_derivative(ctx.nabla, X, Y) -
                  contract_endo_derivative(ctx.nabla, Vec(P * X), Vec(P * Y));
        r = std::max(r, maxabs(Vec(S1 - alt)));
        r = std::max(
            r, maxabs(Vec(P * S1 + s_operator_core(ctx, X, Vec(P * Y)))));
        r = std::max(
            r, maxabs(Vec(P * S1 - s_operator_core(ctx, Vec(P * X), Y))));
        r = std::max(r, maxabs(s_operator_core(ctx, Vec(pr.plus * X),
                                               Vec(pr.plus * Y))));
        r = std::max(r, maxabs(s_operator_core(ctx, Vec(pr.minus * X),
                                               Vec(pr.minus * Y))));
      }
    }
    cover(out, s.name, r);
  }
  return finish(out);
}

SuiteResult suite_s_operator_golden(const WorkspaceConfig& ws,
                                    const SamplePlan& plan,
                                    const Filter& filter, double tol) {
  SuiteResult out = base_result("s-operator-golden", tol);
  for (const auto& s : ws.catalog.structures) {
    if (s.field.kind != StructureKind::Golden) continue;
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    Rng rng(0);
    double r = 0.0;
    for (const Vec& p :
         suite_points(*M, plan, "s-operator-golden", s.name, rng)) {
      StructureContext ctx = structure_context_at(*M, s.field, p);
      const Mat& G = ctx.phi.value;
      Projectors pr = projectors_from_value(s.field, G);
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(M->dim, rng);
        Vec Y = random_vec(M->dim, rng);
        Vec S1 = s_operator_core(ctx, X, Y);
        Vec alt = contract_endo_derivative(ctx.nabla, X, Y) -
                  contract_endo_derivative(ctx.nabla, Vec(G * X), Vec(G * Y)) +
                  contract_endo_derivative(ctx.nabla, Vec(G * X), Y);
        r = std::max(r, maxabs(Vec(S1 - alt)));
        r = std::max(r, maxabs(s_operator_core(ctx, Vec(pr.plus * X),
                                               Vec(pr.plus * Y))));
        r = std::max(r, maxabs(s_operator_core(ctx, Vec(pr.minus * X),
                                               Vec(pr.minus * Y))));
      }
    }
    cover(out, s.name, r);
  }
  return finish(out);
}

SuiteResult suite_s_vanishing_equivalence(const WorkspaceConfig& ws,
                                          const SamplePlan& plan,
                                          const Filter& filter, double tol) {
  SuiteResult out = base_result("s-vanishing-equivalence", tol);
  for (const auto& s : ws.catalog.structures) {
    if (s.field.kind != StructureKind::Product) continue;
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    Rng rng(0);
    double rf = 0.0, rd = 0.0, rm = 0.0;
    for (const Vec& p :
         suite_points(*M, plan, "s-vanishing-equivalence", s.name, rng)) {
      StructureContext ctx = structure_context_at(*M, s.field, p);
      const Mat& P = ctx.phi.value;
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(M->dim, rng);
        Vec Y = random_vec(M->dim, rng);
        rf = std::max(rf, maxabs(s_operator_core(ctx, X, Y)));
        rd = std::max(rd, maxabs(s_operator_core(ctx, X, X)));
        rm = std::max(rm, maxabs(s_operator_core(ctx, X, Vec(P * X))));
      }
    }
    double thr = ws.tolerances.flag;
    bool bf = rf < thr, bd = rd < thr, bm = rm < thr;
    bool agree = (bf == bd) && (bd == bm);
    cover(out, s.name, agree ? 0.0 : 1.0,
          "full " + fmt(rf) + " diag " + fmt(rd) + " mixed " + fmt(rm));
  }
  return finish(out);
}

SuiteResult suite_compat_family(const WorkspaceConfig& ws,
                                const SamplePlan& plan, const Filter& filter,
                                double tol) {
  SuiteResult out = base_result("compat-family", tol);
  for (const auto& s : ws.catalog.structures) {
    if (s.field.kind != StructureKind::Product) continue;
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    StructureField fam[4] = {s.field, conjugate_of(s.field), twin_of(s.field),
                             conjugate_of(twin_of(s.field))};
    Rng rng(0);
    bool agree = true;
    for (const Vec& p : suite_points(*M, plan, "compat-family", s.name, rng)) {
      CompatibilityVerdict v0 = compatibility_at(*M, fam[0], p);
      for (int i = 1; i < 4; ++i) {
        CompatibilityVerdict vi = compatibility_at(*M, fam[i], p);
        if (vi.pure != v0.pure || vi.hyperbolic != v0.hyperbolic) agree = false;
      }
    }
    CompatibilityVerdict v = compatibility_at(*M, s.field, Vec(Vec::Zero(M->dim)));
    cover(out, s.name, agree ? 0.0 : 1.0,
          std::string("family agrees on pure=") + (v.pure ? "yes" : "no") +
              " hyperbolic=" + (v.hyperbolic ? "yes" : "no"));
  }
  return finish(out);
}

SuiteResult suite_hyperbolic_identities(const WorkspaceConfig& ws,
                                        const SamplePlan& plan,
                                        const Filter& filter, double tol) {
  SuiteResult out = base_result("hyperbolic-identities", tol);
  for (const auto& s : ws.catalog.structures) {
    if (s.field.kind != StructureKind::Product) continue;
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    Rng rng(0);
    std::vector<Vec> pts =
        suite_points(*M, plan, "hyperbolic-identities", s.name, rng);
    if (!compatibility_at(*M, s.field, pts.front()).hyperbolic) continue;
    StructureField G = twin_of(s.field);
    double r = 0.0;
    for (const Vec& p : pts) {
      Mat h = metric_value_at(*M, p);
      Mat P = endo_value_at(s.field.endo, p);
      Mat Gv = endo_value_at(G.endo, p);
      Projectors pr = projectors_from_value(s.field, P);
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(M->dim, rng);
        Vec Y = random_vec(M->dim, rng);
        r = std::max(r, std::abs(X.dot(h * Vec(P * X))));
        r = std::max(
            r, std::abs(2.0 * X.dot(h * Vec(Gv * X)) - X.dot(h * X)));
        r = std::max(r, std::abs(Vec(pr.plus * X).dot(h * Vec(pr.plus * Y))));
        r = std::max(r,
                     std::abs(Vec(pr.minus * X).dot(h * Vec(pr.minus * Y))));
      }
    }
    cover(out, s.name, r, "null eigendistributions, twin trace relation");
  }
  return finish(out);
}

SuiteResult suite_signature_rank(const WorkspaceConfig& ws,
                                 const SamplePlan& plan, const Filter& filter,
                                 double tol) {
  SuiteResult out = base_result("signature-rank", tol);
  struct Want {
    const char* name;
    int plus, minus;
  };
  static const Want wants[] = {
      {"euclid2", 2, 0}, {"hyper2", 1, 1}, {"warped2", 2, 0}, {"heisen4", 2, 2}};
  for (const auto& M : ws.catalog.manifolds) {
    if (!filter.allows({M.name})) continue;
    Rng rng(0);
    std::vector<Vec> pts = suite_points(M, plan, "signature-rank", M.name, rng);
    std::pair<int, int> sig0 = signature_at(M, pts.front());
    bool constant = true;
    for (const Vec& p : pts)
      if (signature_at(M, p) != sig0) constant = false;
    bool expected_ok = true;
    for (const Want& w : wants)
      if (M.name == w.name &&
          sig0 != std::make_pair(w.plus, w.minus))
        expected_ok = false;
    cover(out, M.name, (constant && expected_ok) ? 0.0 : 1.0,
          "(" + std::to_string(sig0.first) + "," + std::to_string(sig0.second) +
              ")" + (constant ? "" : " varies over the box"));
  }
  return finish(out);
}

SuiteResult suite_classifier_coherence(const WorkspaceConfig& ws,
                                       const SamplePlan& plan,
                                       const Filter& filter, double tol) {
  SuiteResult out = base_result("classifier-coherence", tol);

  struct FlagExpect {
    const char* entry;
    const char* flag;
    bool verdict;
  };
  // Hand-checked classifications of the built-in entries.
  static const FlagExpect expected[] = {
      {"euclid2-P", "pure", true},
      {"euclid2-P", "hyperbolic", false},
      {"euclid2-P", "integrable", true},
      {"euclid2-P", "parallel", true},
      {"euclid2-P", "star_condition", true},
      {"euclid2-P", "locally_decomposable", true},
      {"euclid2-P", "semi_decomposable", true},
      {"euclid2-P", "vidal_plus", true},
      {"euclid2-P", "vidal_minus", true},
      {"euclid2-P", "minimal_plus", true},
      {"euclid2-P", "minimal_minus", true},
      {"euclid2-G", "pure", true},
      {"euclid2-G", "parallel", true},
      {"euclid2-G", "locally_golden", true},
      {"hyper2-P", "pure", false},
      {"hyper2-P", "hyperbolic", true},
      {"hyper2-P", "integrable", true},
      {"hyper2-P", "parallel", true},
      {"hyper2-P", "para_kaehler", true},
      {"hyper2-P", "quasi", true},
      {"hyper2-P", "semi", true},
      {"hyper2-G", "hyperbolic", true},
      {"hyper2-G", "parallel", true},
      {"warped2-P", "pure", true},
      {"warped2-P", "integrable", true},
      {"warped2-P", "parallel", false},
      {"warped2-P", "nearly", false},
      {"warped2-P", "quasi", false},
      {"warped2-P", "semi", false},
      {"warped2-P", "star_condition", false},
      {"warped2-P", "almost_decomposable", false},
      {"warped2-P", "locally_decomposable", false},
      {"warped2-P", "semi_decomposable", false},
      {"warped2-P", "minimal_plus", true},
      {"warped2-P", "minimal_minus", false},
      {"warped2-G", "pure", true},
      {"warped2-G", "parallel", false},
      {"heisen4-P", "hyperbolic", true},
      {"heisen4-P", "integrable", false},
      {"heisen4-P", "parallel", false},
      {"heisen4-P", "nearly", false},
      {"heisen4-P", "quasi", true},
      {"heisen4-P", "semi", true},
      {"heisen4-P", "vidal_plus", false},
      {"heisen4-P", "vidal_minus", true},
      {"heisen4-G", "hyperbolic", true},
      {"heisen4-G", "integrable", false},
  };
  struct EvalExpect {
    const char* entry;
    const char* flag;
  };
  // Null eigendistributions admit no orthonormal frame, so the minimality
  // flags on hyperbolic entries must come back not-evaluable.
  static const EvalExpect not_evaluable[] = {
      {"hyper2-P", "minimal_plus"},   {"hyper2-P", "minimal_minus"},
      {"heisen4-P", "minimal_plus"},  {"heisen4-P", "minimal_minus"},
      {"heisen4-G", "minimal_plus"},  {"heisen4-G", "minimal_minus"},
  };

  for (const auto& s : ws.catalog.structures) {
    if (!filter.allows({s.name, s.manifold})) continue;
    const ManifoldSpec* M = ws.catalog.manifold(s.manifold);
    ClassificationReport rep = classify_entry(ws, plan, s);
    std::vector<std::string> problems = coherence_violations(rep);

    for (const FlagExpect& e : expected) {
      if (s.name != e.entry) continue;
      const FlagEntry* f = rep.find(e.flag);
      if (f == nullptr || !f->evaluable || f->verdict != e.verdict)
        problems.push_back(std::string(e.flag) + " expected " +
                           (e.verdict ? "true" : "false"));
    }
    for (const EvalExpect& e : not_evaluable) {
      if (s.name != e.entry) continue;
      const FlagEntry* f = rep.find(e.flag);
      if (f == nullptr || f->evaluable)
        problems.push_back(std::string(e.flag) + " expected not evaluable");
    }

    // Conjugation and twinning leave these flags untouched.
    if (s.field.kind == StructureKind::Product) {
      Rng rng(mix_seed(plan.seed, "points:" + M->name));
      std::vector<Vec> pts = sample_points(M->sample_box, plan.points, rng);
      ClassifyOptions opt = classify_options(ws, plan);
      const char* shared[] = {"pure",     "hyperbolic", "integrable",
                              "parallel", "semi",       "quasi"};
      StructureField others[3] = {conjugate_of(s.field), twin_of(s.field),
                                  conjugate_of(twin_of(s.field))};
      const char* labels[3] = {"conjugate", "twin", "conjugate twin"};
      for (int i = 0; i < 3; ++i) {
        ClassificationReport or_ = classify(*M, others[i], pts, opt);
        for (const char* fl : shared)
          if (flag_verdict(rep, fl) != flag_verdict(or_, fl))
            problems.push_back(std::string(fl) + " differs on the " +
                               labels[i]);
      }

      // Parallel against the integrability + form conditions, in both
      // metric compatibility regimes.
      bool parallel = flag_verdict(rep, "parallel");
      if (flag_verdict(rep, "hyperbolic")) {
        bool rhs = flag_verdict(rep, "integrable") &&
                   flag_verdict(rep, "para_kaehler");
        if (parallel != rhs)
          problems.push_back("parallel vs integrable+form mismatch");
      }
      if (flag_verdict(rep, "pure")) {
        bool rhs = flag_verdict(rep, "integrable") &&
                   flag_verdict(rep, "star_condition");
        if (parallel != rhs)
          problems.push_back("parallel vs integrable+exchange mismatch");
        // Pure case: parallel, S = 0, Psi h = 0 and the Tachibana
        // derivative of h all vanish together.
        double rp = 0.0, rt = 0.0;
        Rng vr(mix_seed(plan.seed, "verify:classifier-coherence:" + s.name));
        for (const Vec& p : pts) {
          for (int a = 0; a < M->dim; ++a)
            for (int b = 0; b < M->dim; ++b)
              for (int c = 0; c < M->dim; ++c) {
                VectorFieldSpec X = coordinate_field(M->dim, a);
                VectorFieldSpec Y = coordinate_field(M->dim, b);
                VectorFieldSpec Z = coordinate_field(M->dim, c);
                rp = std::max(rp,
                              std::abs(psi_metric_at(*M, s.field, X, Y, Z, p)));
                rt = std::max(
                    rt, std::abs(tachibana_metric_at(*M, s.field, X, Y, Z, p)));
              }
        }
        (void)vr;
        bool quasi = flag_verdict(rep, "quasi");
        bool psi0 = rp < ws.tolerances.flag;
        bool tach0 = rt < ws.tolerances.flag;
        if (!(parallel == quasi && quasi == psi0 && psi0 == tach0))
          problems.push_back("parallel/S/Psi/derivative quartet disagrees");
      }
    }

    std::string note = problems.empty() ? "coherent" : problems.front();
    if (problems.size() > 1)
      note += " (+" + std::to_string(problems.size() - 1) + " more)";
    cover(out, s.name, problems.empty() ? 0.0 : 1.0, note);
  }
  return finish(out);
}

// -- map suites -------------------------------------------------------------

struct MapSetup {
  const CatalogMap* map = nullptr;
  const ManifoldSpec* M = nullptr;
  const ManifoldSpec* N = nullptr;
  const CatalogStructure* sM = nullptr;
  const CatalogStructure* sN = nullptr;
};

MapSetup map_setup(const Catalog& cat, const CatalogMap& m) {
  MapSetup s;
  s.map = &m;
  s.M = cat.manifold(m.spec.source);
  s.N = cat.manifold(m.spec.target);
  s.sM = product_structure_for(cat, m.spec.source);
  s.sN = product_structure_for(cat, m.spec.target);
  return s;
}

SuiteResult suite_map_family_coherence(const WorkspaceConfig& ws,
                                       const SamplePlan& plan,
                                       const Filter& filter, double tol) {
  SuiteResult out = base_result("map-family-coherence", tol);
  for (const auto& m : ws.catalog.maps) {
    if (!filter.allows({m.spec.name, m.spec.source, m.spec.target})) continue;
    MapSetup st = map_setup(ws.catalog, m);
    if (st.sM == nullptr || st.sN == nullptr) continue;
    Rng rng(0);
    std::vector<Vec> pts =
        suite_points(*st.M, plan, "map-family-coherence", m.spec.name, rng);
    IntertwiningClass cls =
        intertwining_class(*st.M, *st.N, m.spec, st.sM->field, st.sN->field,
                           pts, ws.tolerances.cross_check);
    // The golden defect is exactly (sqrt5 / 2) times the product defect,
    // pointwise and entrywise, so the residual maxima scale the same way.
    double half_root5 = 0.5 * kSqrt5;
    double r = std::abs(cls.find("golden")->residual -
                        half_root5 * cls.find("para")->residual);
    r = std::max(r, std::abs(cls.find("anti_golden")->residual -
                             half_root5 * cls.find("anti_para")->residual));
    cover(out, m.spec.name, r);
  }
  return finish(out);
}

SuiteResult suite_map_exp_reproduction(const WorkspaceConfig& ws,
                                       const SamplePlan& plan,
                                       const Filter& filter, double tol) {
  SuiteResult out = base_result("map-exp-reproduction", tol);
  const CatalogMap* m = ws.catalog.map("exp-euclid2");
  if (m != nullptr &&
      filter.allows({m->spec.name, m->spec.source, m->spec.target})) {
    MapSetup st = map_setup(ws.catalog, *m);
    if (st.sM != nullptr && st.sN != nullptr) {
      Rng rng(0);
      std::vector<Vec> pts =
          suite_points(*st.M, plan, "map-exp-reproduction", m->spec.name, rng);
      IntertwiningClass cls = intertwining_class(
          *st.M, *st.N, m->spec, st.sM->field, st.sN->field, pts, tol);
      double r = cls.find("para")->residual;
      r = std::max(r, cls.find("golden")->residual);
      for (const Vec& p : pts) {
        TensionResult t = tension_at(*st.M, *st.N, m->spec, p, &st.sM->field,
                                     &st.sN->field, +1);
        Vec want(2);
        want << 0.0, std::exp(p(1));
        r = std::max(r, maxabs(Vec(t.tension - want)));
      }
      HarmonicityHypotheses hyp = hypotheses_for(ws, plan, *st.sM, *st.sN);
      HarmonicityReport harm =
          harmonicity_report(*st.M, *st.N, m->spec, &st.sM->field,
                             &st.sN->field, +1, hyp, pts, tol);
      std::string note = "tension (0, exp(t)); harmonic=" +
                         std::string(harm.harmonic ? "yes" : "no");
      if (harm.harmonic) r = std::max(r, 1.0);  // must not be harmonic
      if (harm.equivalence_applicable && !harm.equivalence_holds)
        r = std::max(r, 1.0);
      cover(out, m->spec.name, r, note);
    }
  }
  return finish(out);
}

SuiteResult suite_map_harmonic_fixtures(const WorkspaceConfig& ws,
                                        const SamplePlan& plan,
                                        const Filter& filter, double tol) {
  SuiteResult out = base_result("map-harmonic-fixtures", tol);
  static const char* fixtures[] = {"id-euclid2", "id-hyper2",   "id-warped2",
                                   "id-heisen4", "swap-hyper2", "const-euclid2"};
  for (const char* name : fixtures) {
    const CatalogMap* m = ws.catalog.map(name);
    if (m == nullptr) continue;
    if (!filter.allows({m->spec.name, m->spec.source, m->spec.target}))
      continue;
    MapSetup st = map_setup(ws.catalog, *m);
    Rng rng(0);
    double r = 0.0;
    for (const Vec& p :
         suite_points(*st.M, plan, "map-harmonic-fixtures", name, rng)) {
      TensionResult t = tension_at(*st.M, *st.N, m->spec, p);
      r = std::max(r, t.tension_norm);
    }
    cover(out, name, r);
  }
  return finish(out);
}

SuiteResult suite_second_form_commutation(const WorkspaceConfig& ws,
                                          const SamplePlan& plan,
                                          const Filter& filter, double tol) {
  SuiteResult out = base_result("second-form-commutation", tol);
  for (const auto& m : ws.catalog.maps) {
    if (!filter.allows({m.spec.name, m.spec.source, m.spec.target})) continue;
    MapSetup st = map_setup(ws.catalog, m);
    if (st.sM == nullptr || st.sN == nullptr) continue;
    Rng rng(0);
    std::vector<Vec> pts =
        suite_points(*st.M, plan, "second-form-commutation", m.spec.name, rng);
    IntertwiningClass cls =
        intertwining_class(*st.M, *st.N, m.spec, st.sM->field, st.sN->field,
                           pts, ws.tolerances.cross_check);
    if (cls.lambda == 0) continue;
    double r = 0.0;
    for (const Vec& p : pts) {
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(st.M->dim, rng);
        Vec Y = random_vec(st.M->dim, rng);
        r = std::max(r, second_form_commutation_residual_at(
                            *st.M, *st.N, m.spec, st.sM->field, st.sN->field,
                            cls.lambda, X, Y, p));
      }
    }
    cover(out, m.spec.name, r,
          std::string("lambda ") + (cls.lambda > 0 ? "+1" : "-1"));
  }
  return finish(out);
}

SuiteResult suite_parallel_commutation(const WorkspaceConfig& ws,
                                       const SamplePlan& plan,
                                       const Filter& filter, double tol) {
  SuiteResult out = base_result("parallel-commutation", tol);
  for (const auto& m : ws.catalog.maps) {
    if (!filter.allows({m.spec.name, m.spec.source, m.spec.target})) continue;
    MapSetup st = map_setup(ws.catalog, m);
    if (st.sM == nullptr || st.sN == nullptr) continue;
    Rng rng(0);
    std::vector<Vec> pts =
        suite_points(*st.M, plan, "parallel-commutation", m.spec.name, rng);

    auto parallel_on = [](const ManifoldSpec& man, const StructureField& f,
                          const Vec& p) {
      double nab = 0.0;
      for (const Mat& d : structure_context_at(man, f, p).nabla)
        nab = std::max(nab, maxabs(d));
      return nab < 1e-10;
    };
    if (!parallel_on(*st.M, st.sM->field, pts.front()) ||
        !parallel_on(*st.N, st.sN->field, pts.front()))
      continue;
    IntertwiningClass cls =
        intertwining_class(*st.M, *st.N, m.spec, st.sM->field, st.sN->field,
                           pts, ws.tolerances.cross_check);
    if (cls.lambda == 0) continue;

    double r = 0.0;
    for (const Vec& p : pts) {
      MapContext mc = map_context_at(*st.M, *st.N, m.spec, p);
      Mat P = endo_value_at(st.sM->field.endo, p);
      for (int k = 0; k < plan.fields_per_point; ++k) {
        Vec X = random_vec(st.M->dim, rng);
        Vec Y = random_vec(st.M->dim, rng);
        Vec lhs = second_fundamental_core(mc, Vec(P * X), Vec(P * Y));
        Vec rhs = second_fundamental_core(mc, X, Y);
        r = std::max(r, maxabs(Vec(lhs - rhs)));
      }
    }
    cover(out, m.spec.name, r, "both structures parallel");
  }
  return finish(out);
}

SuiteResult suite_tension_split(const WorkspaceConfig& ws,
                                const SamplePlan& plan, const Filter& filter,
                                double tol) {
  SuiteResult out = base_result("tension-split", tol);
  for (const auto& m : ws.catalog.maps) {
    if (!filter.allows({m.spec.name, m.spec.source, m.spec.target})) continue;
    MapSetup st = map_setup(ws.catalog, m);
    if (st.sM == nullptr || st.sN == nullptr) continue;
    Rng rng(0);
    std::vector<Vec> pts =
        suite_points(*st.M, plan, "tension-split", m.spec.name, rng);
    IntertwiningClass cls =
        intertwining_class(*st.M, *st.N, m.spec, st.sM->field, st.sN->field,
                           pts, ws.tolerances.cross_check);
    double r = 0.0;
    int split_count = 0;
    for (const Vec& p : pts) {
      TensionResult t = tension_at(*st.M, *st.N, m.spec, p, &st.sM->field,
                                   &st.sN->field, cls.lambda);
      if (!t.split_available) continue;
      ++split_count;
      r = std::max(r, maxabs(Vec(t.tension -
                                 (t.d_tension_plus + t.d_tension_minus))));
    }
    HarmonicityHypotheses hyp = hypotheses_for(ws, plan, *st.sM, *st.sN);
    HarmonicityReport harm =
        harmonicity_report(*st.M, *st.N, m.spec, &st.sM->field, &st.sN->field,
                           cls.lambda, hyp, pts, ws.tolerances.cross_check);
    std::string note = "split at " + std::to_string(split_count) + "/" +
                       std::to_string(pts.size()) + " points";
    if (harm.equivalence_applicable) {
      note += harm.equivalence_holds ? "; equivalence holds"
                                     : "; equivalence FAILS";
      if (!harm.equivalence_holds) r = std::max(r, 1.0);
    } else {
      note += "; equivalence not applicable";
    }
    cover(out, m.spec.name, r, note);
  }
  return finish(out);
}

SuiteResult suite_tension_structure_formula(const WorkspaceConfig& ws,
                                            const SamplePlan& plan,
                                            const Filter& filter, double tol) {
  SuiteResult out = base_result("tension-structure-formula", tol);
  for (const auto& m : ws.catalog.maps) {
    if (!filter.allows({m.spec.name, m.spec.source, m.spec.target})) continue;
    MapSetup st = map_setup(ws.catalog, m);
    if (st.sM == nullptr || st.sN == nullptr) continue;
    Rng rng(0);
    std::vector<Vec> pts = suite_points(*st.M, plan, "tension-structure-formula",
                                        m.spec.name, rng);
    if (!compatibility_at(*st.M, st.sM->field, pts.front()).hyperbolic)
      continue;
    IntertwiningClass cls =
        intertwining_class(*st.M, *st.N, m.spec, st.sM->field, st.sN->field,
                           pts, ws.tolerances.cross_check);
    if (cls.lambda == 0) continue;
    double r = 0.0;
    for (const Vec& p : pts)
      r = std::max(r, tension_structure_residual_at(*st.M, *st.N, m.spec,
                                                    st.sM->field, st.sN->field,
                                                    cls.lambda, p));
    cover(out, m.spec.name, r,
          std::string("lambda ") + (cls.lambda > 0 ? "+1" : "-1"));
  }
  return finish(out);
}

SuiteResult suite_constancy_screen(const WorkspaceConfig& ws,
                                   const SamplePlan& plan, const Filter& filter,
                                   double tol) {
  SuiteResult out = base_result("constancy-screen", tol);
  for (const auto& m : ws.catalog.maps) {
    if (!filter.allows({m.spec.name, m.spec.source, m.spec.target})) continue;
    MapSetup st = map_setup(ws.catalog, m);
    if (st.sM == nullptr || st.sN == nullptr) continue;
    Rng rng(0);
    std::vector<Vec> pts =
        suite_points(*st.M, plan, "constancy-screen", m.spec.name, rng);
    IntertwiningClass cls =
        intertwining_class(*st.M, *st.N, m.spec, st.sM->field, st.sN->field,
                           pts, ws.tolerances.cross_check);
    ConstancyDiagnostic d = constancy_diagnostic(cls);
    bool ok = !d.fired;
    std::string note = d.fired ? d.message : "silent";
    if (m.spec.name == "const-euclid2") {
      // The constant map is the one fixture on which every mixed relation
      // must hold, with a vanishing differential.
      for (const auto& rel : cls.relations)
        if (!rel.holds) ok = false;
      if (cls.max_jacobian > 1e-12) ok = false;
      note = ok ? "all relations hold, differential vanishes" : note;
    }
    cover(out, m.spec.name, ok ? 0.0 : 1.0, note);
  }
  return finish(out);
}

struct SuiteSpec {
  const char* name;
  double tol;
  bool boolean_suite;
  SuiteResult (*fn)(const WorkspaceConfig&, const SamplePlan&, const Filter&,
                    double);
};

const SuiteSpec kSuites[] = {
    {"classifier-coherence", 0.5, true, suite_classifier_coherence},
    {"compat-family", 0.5, true, suite_compat_family},
    {"constancy-screen", 0.5, true, suite_constancy_screen},
    {"form-derivative-identity", 1e-7, false, suite_form_derivative_identity},
    {"hyperbolic-identities", 1e-9, false, suite_hyperbolic_identities},
    {"map-exp-reproduction", 1e-9, false, suite_map_exp_reproduction},
    {"map-family-coherence", 1e-10, false, suite_map_family_coherence},
    {"map-harmonic-fixtures", 1e-9, false, suite_map_harmonic_fixtures},
    {"nijenhuis-cross", 1e-8, false, suite_nijenhuis_cross},
    {"nijenhuis-heisen4-value", 1e-9, false, suite_nijenhuis_heisen4_value},
    {"parallel-commutation", 1e-8, false, suite_parallel_commutation},
    {"psi-derivative-identity", 1e-8, false, suite_psi_derivative_identity},
    {"psi-parallel-vanishing", 1e-9, false, suite_psi_parallel_vanishing},
    {"s-operator-golden", 1e-9, false, suite_s_operator_golden},
    {"s-operator-product", 1e-9, false, suite_s_operator_product},
    {"s-vanishing-equivalence", 0.5, true, suite_s_vanishing_equivalence},
    {"second-form-commutation", 1e-8, false, suite_second_form_commutation},
    {"signature-rank", 0.5, true, suite_signature_rank},
    {"tachibana-pure-form", 1e-8, false, suite_tachibana_pure_form},
    {"tension-split", 1e-8, false, suite_tension_split},
    {"tension-structure-formula", 1e-8, false, suite_tension_structure_formula},
    {"twin-algebra", 1e-12, false, suite_twin_algebra},
    {"twin-projectors", 1e-9, false, suite_twin_projectors},
    {"twin-ratio-derivative", 1e-8, false, suite_twin_ratio_derivative},
    {"twin-ratio-nijenhuis", 1e-8, false, suite_twin_ratio_nijenhuis},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const SuiteSpec& s : kSuites) out.push_back(s.name);
  return out;
}

std::vector<SuiteResult> run_verify(const WorkspaceConfig& ws,
                                    const VerifyOptions& opt) {
  if (!opt.suites.empty()) {
    for (const auto& want : opt.suites) {
      bool known = false;
      for (const SuiteSpec& s : kSuites)
        if (want == s.name) known = true;
      if (!known) throw ConfigError("unknown suite '" + want + "'");
    }
  }
  Filter filter{opt.entries};
  std::vector<SuiteResult> out;
  for (const SuiteSpec& s : kSuites) {
    if (!opt.suites.empty() &&
        std::find(opt.suites.begin(), opt.suites.end(), s.name) ==
            opt.suites.end())
      continue;
    double tol = s.tol;
    if (!s.boolean_suite && opt.tol_override > 0.0) tol = opt.tol_override;
    out.push_back(s.fn(ws, opt.plan, filter, tol));
  }
  std::sort(out.begin(), out.end(),
            [](const SuiteResult& a, const SuiteResult& b) {
              return a.name < b.name;
            });
  return out;
}

bool all_pass(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

ClassificationReport run_classify(const WorkspaceConfig& ws,
                                  const std::string& structure_name,
                                  const SamplePlan& plan, double tol) {
  const CatalogStructure* s = ws.catalog.structure(structure_name);
  if (s == nullptr)
    throw ConfigError("unknown catalog structure '" + structure_name +
                      "'; see `catalog list`");
  const ManifoldSpec* M = ws.catalog.manifold(s->manifold);
  Rng rng(mix_seed(plan.seed, "points:" + M->name));
  std::vector<Vec> pts = sample_points(M->sample_box, plan.points, rng);
  ClassifyOptions opt;
  opt.tol = tol;
  opt.fields_per_point = plan.fields_per_point;
  opt.seed = plan.seed;
  ClassificationReport rep = classify(*M, s->field, pts, opt);
  rep.structure = s->name;
  return rep;
}

MapCheckReport run_check_map(const WorkspaceConfig& ws,
                             const std::string& map_name,
                             const SamplePlan& plan, double tol) {
  const CatalogMap* m = ws.catalog.map(map_name);
  if (m == nullptr)
    throw ConfigError("unknown catalog map '" + map_name +
                      "'; see `catalog list`");
  MapSetup st = map_setup(ws.catalog, *m);

  MapCheckReport rep;
  rep.map = m->spec.name;
  rep.source = m->spec.source;
  rep.target = m->spec.target;

  Rng rng(mix_seed(plan.seed, "check-map:" + map_name));
  std::vector<Vec> pts = sample_points(st.M->sample_box, plan.points, rng);

  if (st.sM != nullptr && st.sN != nullptr) {
    rep.relations_available = true;
    rep.cls = intertwining_class(*st.M, *st.N, m->spec, st.sM->field,
                                 st.sN->field, pts, tol);
    rep.constancy = constancy_diagnostic(rep.cls);
    rep.hypotheses = hypotheses_for(ws, plan, *st.sM, *st.sN);
    rep.harmonicity =
        harmonicity_report(*st.M, *st.N, m->spec, &st.sM->field, &st.sN->field,
                           rep.cls.lambda, rep.hypotheses, pts, tol);
    rep.sample_tension = tension_at(*st.M, *st.N, m->spec, pts.front(),
                                    &st.sM->field, &st.sN->field,
                                    rep.cls.lambda);
    rep.structure_note = "relations through " + st.sM->name + " and " +
                         st.sN->name + " with their twins and conjugates";
  } else {
    rep.relations_available = false;
    rep.harmonicity = harmonicity_report(*st.M, *st.N, m->spec, nullptr,
                                         nullptr, 0, {}, pts, tol);
    rep.sample_tension = tension_at(*st.M, *st.N, m->spec, pts.front());
    rep.structure_note =
        "no product structure registered on source or target; intertwining "
        "skipped";
  }
  return rep;
}

}  // namespace golden
