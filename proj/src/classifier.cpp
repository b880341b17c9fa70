#include "golden/classifier.hpp"

#include <algorithm>
#include <cmath>

namespace golden {

const FlagEntry* ClassificationReport::find(const std::string& name) const {
  for (const auto& f : flags)
    if (f.name == name) return &f;
  return nullptr;
}

namespace {

EndoJet projector_jet(const EndoJet& phi, double plus_eigen, double minus_eigen,
                      bool plus) {
  const int n = static_cast<int>(phi.value.rows());
  const double span = plus_eigen - minus_eigen;
  EndoJet out;
  out.deriv.resize(phi.deriv.size());
  if (plus) {
    out.value = (phi.value - minus_eigen * Mat::Identity(n, n)) / span;
    for (size_t i = 0; i < phi.deriv.size(); ++i)
      out.deriv[i] = phi.deriv[i] / span;
  } else {
    out.value = (plus_eigen * Mat::Identity(n, n) - phi.value) / span;
    for (size_t i = 0; i < phi.deriv.size(); ++i)
      out.deriv[i] = -phi.deriv[i] / span;
  }
  return out;
}

// Defect of one test vector u: complement part of nabla_v X at p, where
// v = pi u and X = pi U for the constant extension U of u.
double vidal_defect(const PointGeometry& geom, const EndoJet& pi,
                    const Mat& complement, const Vec& u) {
  const int n = static_cast<int>(u.size());
  FieldJet X;
  X.value = pi.value * u;
  X.jac = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) X.jac.col(i) = pi.deriv[i] * u;
  Vec w = covariant_vector_jets(geom.gamma, X.value, X);
  return (complement * w).norm();
}

struct DistributionFrames {
  bool ok = false;
  std::vector<Vec> vectors;
  std::vector<int> signs;
};

DistributionFrames frame_of_distribution(const Mat& h, const Mat& projector) {
  DistributionFrames out;
  const int n = static_cast<int>(h.rows());
  int rank = static_cast<int>(std::lround(projector.trace()));
  std::vector<Vec> candidates;
  for (int j = 0; j < n; ++j) candidates.push_back(projector.col(j));
  GramSchmidtResult gs = gram_schmidt(h, candidates);
  if (!gs.complete || static_cast<int>(gs.vectors.size()) != rank) return out;
  out.ok = true;
  out.vectors = gs.vectors;
  out.signs = gs.signs;
  return out;
}

}  // namespace

DistributionCheck vidal_check(const ManifoldSpec& M, const StructureField& S,
                              int eigen_sign, const std::vector<Vec>& points,
                              Rng& rng, int fields_per_point) {
  DistributionCheck out;
  const bool plus = eigen_sign > 0;
  for (const Vec& p : points) {
    PointGeometry geom = point_geometry_at(M, p);
    EndoJet phi = endo_jet_at(S.endo, p);
    EndoJet pi = projector_jet(phi, S.eigen_plus(), S.eigen_minus(), plus);
    EndoJet pic = projector_jet(phi, S.eigen_plus(), S.eigen_minus(), !plus);
    const int n = static_cast<int>(p.size());
    for (int f = 0; f < fields_per_point; ++f) {
      Vec u(n);
      for (int i = 0; i < n; ++i) u(i) = rng.uniform(-1.0, 1.0);
      out.residual =
          std::max(out.residual, vidal_defect(geom, pi, pic.value, u));
    }
  }
  return out;
}

DistributionCheck critical_check(const ManifoldSpec& M, const StructureField& S,
                                 int eigen_sign,
                                 const std::vector<Vec>& points) {
  DistributionCheck out;
  out.definite = true;
  const bool plus = eigen_sign > 0;
  for (const Vec& p : points) {
    PointGeometry geom = point_geometry_at(M, p);
    EndoJet phi = endo_jet_at(S.endo, p);
    EndoJet pi = projector_jet(phi, S.eigen_plus(), S.eigen_minus(), plus);
    EndoJet pic = projector_jet(phi, S.eigen_plus(), S.eigen_minus(), !plus);
    DistributionFrames fr = frame_of_distribution(geom.h, pi.value);
    if (!fr.ok) {
      out.evaluable = false;
      out.definite = false;
      out.note = "no orthonormal frame: restricted metric degenerate";
      return out;
    }
    const int n = static_cast<int>(p.size());
    Vec total = Vec::Zero(n);
    for (size_t i = 0; i < fr.vectors.size(); ++i) {
      FieldJet X;
      X.value = pi.value * fr.vectors[i];
      X.jac = Mat::Zero(n, n);
      for (int a = 0; a < n; ++a) X.jac.col(a) = pi.deriv[a] * fr.vectors[i];
      total += fr.signs[i] * covariant_vector_jets(geom.gamma, X.value, X);
    }
    out.residual = std::max(out.residual, (pic.value * total).norm());
    for (int s : fr.signs)
      if (s != fr.signs[0]) out.definite = false;
  }
  out.note = out.definite ? "restricted metric definite: minimal"
                          : "restricted metric indefinite: critical only";
  return out;
}

ClassificationReport classify(const ManifoldSpec& M, const StructureField& S,
                              const std::vector<Vec>& points,
                              const ClassifyOptions& opt) {
  ClassificationReport rep;
  rep.manifold = M.name;
  rep.kind = S.kind;
  rep.tol = opt.tol;
  rep.header = "sampled verification, not proof";
  const bool golden = S.kind == StructureKind::Golden;
  const int n = M.dim;

  StructureField twin_storage;
  const StructureField* twin = nullptr;
  if (golden) {
    twin_storage = twin_of(S);
    twin = &twin_storage;
  }

  double r_pure = 0.0, r_hyper = 0.0, r_integrable = 0.0, r_parallel = 0.0;
  double r_star = 0.0, r_domega = 0.0, r_nearly = 0.0, r_quasi = 0.0;
  double r_div = 0.0;

  for (const Vec& p : points) {
    if (polynomial_residual_at(S, p) > 1e-8)
      throw GeometryError("structure polynomial residual too large on '" +
                          M.name + "'");
    PointGeometry geom = point_geometry_at(M, p);
    EndoJet phi = endo_jet_at(S.endo, p);
    std::vector<Mat> nabla = covariant_endo_tensor(geom, phi);

    CompatibilityVerdict cv = compatibility_at(M, S, p, opt.tol);
    r_pure = std::max(r_pure, cv.pure_residual);
    r_hyper = std::max(r_hyper, cv.hyperbolic_residual);

    // Constant basis fields; tensoriality lets them stand in for arbitrary
    // sections in every flag below except the distribution checks.
    std::vector<FieldJet> basis(n);
    for (int i = 0; i < n; ++i) {
      basis[i].value = Vec::Unit(n, i);
      basis[i].jac = Mat::Zero(n, n);
    }

    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec nij = nijenhuis_core(phi, basis[i], basis[j]);
        r_integrable = std::max(r_integrable, nij.cwiseAbs().maxCoeff());
      }

    for (int a = 0; a < n; ++a)
      r_parallel = std::max(r_parallel, nabla[a].cwiseAbs().maxCoeff());

    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Vec pol = nabla[i].col(j) + nabla[j].col(i);
        r_nearly = std::max(r_nearly, pol.cwiseAbs().maxCoeff());
      }

    TwoTensorJet u = metric_jet(geom);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        FieldJet phi_i{phi.value.col(i), Mat::Zero(n, n)};
        FieldJet phi_j{phi.value.col(j), Mat::Zero(n, n)};
        for (int k = 0; k < n; ++k) {
          double lhs = psi_core(phi, u, basis[i], basis[j], basis[k]);
          double rhs = psi_core(phi, u, basis[j], basis[i], basis[k]) +
                       psi_core(phi, u, phi_j, phi_i, basis[k]);
          r_star = std::max(r_star, std::fabs(lhs - rhs));
        }
      }

    // 2-form and S-operator flags go through the twin for a golden
    // structure.
    EndoJet form_phi = phi;
    std::vector<Mat> form_nabla = nabla;
    if (golden) {
      form_phi = endo_jet_at(twin->endo, p);
      form_nabla = covariant_endo_tensor(geom, form_phi);
    }
    std::vector<Mat> dOm = covariant_form_tensor(geom, form_phi);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          double v = dOm[i](j, k) - dOm[j](i, k) + dOm[k](i, j);
          r_domega = std::max(r_domega, std::fabs(v));
        }

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec first = form_nabla[i].col(j);
        Vec x = form_phi.value.col(i);
        Vec second = Vec::Zero(n);
        for (int a = 0; a < n; ++a) second += x(a) * (form_nabla[a].col(j));
        Vec s = first + form_phi.value * second;
        r_quasi = std::max(r_quasi, s.cwiseAbs().maxCoeff());
      }

    Vec div = divergence_endo_at(M, S.endo, p);
    r_div = std::max(r_div, div.cwiseAbs().maxCoeff());
  }

  Rng rng_plus(mix_seed(opt.seed, "vidal:+:" + M.name));
  Rng rng_minus(mix_seed(opt.seed, "vidal:-:" + M.name));
  DistributionCheck vplus =
      vidal_check(M, S, +1, points, rng_plus, opt.fields_per_point);
  DistributionCheck vminus =
      vidal_check(M, S, -1, points, rng_minus, opt.fields_per_point);
  DistributionCheck cplus = critical_check(M, S, +1, points);
  DistributionCheck cminus = critical_check(M, S, -1, points);

  auto add = [&](const std::string& name, double residual,
                 const std::string& definition, bool evaluable = true,
                 const std::string& note = "") {
    FlagEntry f;
    f.name = name;
    f.residual = residual;
    f.evaluable = evaluable;
    f.verdict = evaluable && residual < opt.tol;
    f.definition = definition;
    f.note = note;
    rep.flags.push_back(f);
  };

  const std::string twin_note =
      golden ? "computed through the twin product structure" : "";
  add("pure", r_pure, "h(phi X, Y) = h(X, phi Y)");
  add("hyperbolic", r_hyper, "h(phi X, Y) = h(X, conj(phi) Y)");
  add("integrable", r_integrable, "N_phi = 0");
  add("parallel", r_parallel, "nabla phi = 0");
  add("star_condition", r_star,
      "Psi h(X,Y,Z) = Psi h(Y,X,Z) + Psi h(phi Y, phi X, Z)");
  add("almost_para_kaehler", r_domega, "d Omega = 0", true, twin_note);
  add("para_kaehler", std::max(r_integrable, r_domega),
      "N_phi = 0 and d Omega = 0", true, twin_note);
  add("nearly", r_nearly, "(nabla_X phi) X = 0");
  add("quasi", r_quasi, "S = 0", true, twin_note);
  add("semi", r_div, "div phi = 0");
  add(golden ? "locally_golden" : "locally_product", r_integrable,
      "N_phi = 0");
  add("almost_decomposable", r_star, "the Psi exchange condition holds");
  add("locally_decomposable", std::max(r_integrable, r_star),
      "integrable and the exchange condition holds");
  add("semi_decomposable", r_div, "div phi = 0");
  add("vidal_plus", vplus.residual,
      "nabla_X X stays in the plus eigendistribution for its sections",
      vplus.evaluable, vplus.note);
  add("vidal_minus", vminus.residual,
      "nabla_X X stays in the minus eigendistribution for its sections",
      vminus.evaluable, vminus.note);
  add("minimal_plus", cplus.residual,
      "signed frame sum of nabla_v v stays in the plus eigendistribution",
      cplus.evaluable, cplus.note);
  add("minimal_minus", cminus.residual,
      "signed frame sum of nabla_v v stays in the minus eigendistribution",
      cminus.evaluable, cminus.note);
  return rep;
}

std::vector<std::string> coherence_violations(const ClassificationReport& r) {
  std::vector<std::string> out;
  auto verdict = [&](const char* name) {
    const FlagEntry* f = r.find(name);
    return f != nullptr && f->evaluable && f->verdict;
  };
  if (verdict("parallel")) {
    if (!verdict("integrable"))
      out.push_back("parallel holds but integrable fails");
    if (!verdict("star_condition"))
      out.push_back("parallel holds but the exchange condition fails");
    if (!verdict("quasi")) out.push_back("parallel holds but S does not vanish");
    if (!verdict("almost_para_kaehler"))
      out.push_back("parallel holds but the fundamental form is not closed");
  }
  if (verdict("hyperbolic") && verdict("quasi") && !verdict("semi"))
    out.push_back("S vanishes but the divergence does not");
  if (verdict("locally_decomposable") && !verdict("semi_decomposable"))
    out.push_back("locally decomposable but divergence does not vanish");
  return out;
}

}  // namespace golden
