#include "golden/maps.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace golden {

MapJet map_jet_at(const SmoothMapSpec& F, const Vec& p) {
  const int ns = static_cast<int>(p.size());
  const int nt = static_cast<int>(F.components.size());
  MapJet out;
  out.value = Vec::Zero(nt);
  out.jac = Mat::Zero(nt, ns);
  out.hess.resize(nt);
  for (int g = 0; g < nt; ++g) {
    Jet2 j = jet_evaluate(F.components[g], p);
    out.value(g) = j.value;
    out.jac.row(g) = j.grad.transpose();
    out.hess[g] = j.hess;
  }
  return out;
}

Vec pushforward_at(const SmoothMapSpec& F, const Vec& X, const Vec& p) {
  return map_jet_at(F, p).jac * X;
}

MapContext map_context_at(const ManifoldSpec& M, const ManifoldSpec& N,
                          const SmoothMapSpec& F, const Vec& p) {
  MapContext ctx;
  ctx.jet = map_jet_at(F, p);
  ctx.source_geom = point_geometry_at(M, p);
  ctx.target_gamma = christoffel_at(N, ctx.jet.value);
  const int ns = static_cast<int>(p.size());
  const int nt = static_cast<int>(F.components.size());
  ctx.second.resize(nt);
  for (int g = 0; g < nt; ++g) {
    Mat b = ctx.jet.hess[g];
    for (int k = 0; k < ns; ++k) b -= ctx.jet.jac(g, k) * ctx.source_geom.gamma.g[k];
    b += ctx.jet.jac.transpose() * ctx.target_gamma.g[g] * ctx.jet.jac;
    ctx.second[g] = b;
  }
  return ctx;
}

Vec second_fundamental_core(const MapContext& ctx, const Vec& X, const Vec& Y) {
  const int nt = static_cast<int>(ctx.second.size());
  Vec out(nt);
  for (int g = 0; g < nt; ++g) out(g) = X.dot(ctx.second[g] * Y);
  return out;
}

Vec second_fundamental_form_at(const ManifoldSpec& M, const ManifoldSpec& N,
                               const SmoothMapSpec& F, const Vec& X,
                               const Vec& Y, const Vec& p) {
  MapContext ctx = map_context_at(M, N, F, p);
  return second_fundamental_core(ctx, X, Y);
}

const RelationResidual* IntertwiningClass::find(const std::string& name) const {
  for (const auto& r : relations)
    if (r.name == name) return &r;
  return nullptr;
}

IntertwiningClass intertwining_class(const ManifoldSpec& M,
                                     const ManifoldSpec& N,
                                     const SmoothMapSpec& F,
                                     const StructureField& P_M,
                                     const StructureField& P_N,
                                     const std::vector<Vec>& points,
                                     double tol) {
  (void)M;
  (void)N;
  StructureField G_M = twin_of(P_M);
  StructureField G_N = twin_of(P_N);
  StructureField Pc_M = conjugate_of(P_M);
  StructureField Pc_N = conjugate_of(P_N);
  StructureField Gc_M = conjugate_of(G_M);
  StructureField Gc_N = conjugate_of(G_N);

  struct Entry {
    const char* name;
    const StructureField* src;
    const StructureField* tgt;
    bool cross;
  };
  const Entry entries[] = {
      {"para", &P_M, &P_N, false},
      {"anti_para", &P_M, &Pc_N, false},
      {"golden", &G_M, &G_N, false},
      {"anti_golden", &G_M, &Gc_N, false},
      {"p_to_g", &P_M, &G_N, true},
      {"g_to_p", &G_M, &P_N, true},
      {"p_to_conj_g", &P_M, &Gc_N, true},
      {"conj_p_to_conj_g", &Pc_M, &Gc_N, true},
      {"conj_p_to_g", &Pc_M, &G_N, true},
      {"g_to_conj_p", &G_M, &Pc_N, true},
      {"conj_g_to_conj_p", &Gc_M, &Pc_N, true},
      {"conj_g_to_p", &Gc_M, &P_N, true},
  };

  IntertwiningClass out;
  out.tol = tol;
  for (const Entry& e : entries)
    out.relations.push_back({e.name, 0.0, false, e.cross});

  for (const Vec& p : points) {
    MapJet jet = map_jet_at(F, p);
    const Vec q = jet.value;
    out.max_jacobian =
        std::max(out.max_jacobian, jet.jac.cwiseAbs().maxCoeff());
    for (size_t k = 0; k < out.relations.size(); ++k) {
      Mat src = endo_value_at(entries[k].src->endo, p);
      Mat tgt = endo_value_at(entries[k].tgt->endo, q);
      double r = (jet.jac * src - tgt * jet.jac).cwiseAbs().maxCoeff();
      out.relations[k].residual = std::max(out.relations[k].residual, r);
    }
  }
  for (auto& r : out.relations) r.holds = r.residual < tol;

  bool para = out.relations[0].holds;
  bool anti = out.relations[1].holds;
  out.lambda = para ? 1 : (anti ? -1 : 0);
  out.conflict = para && anti && out.max_jacobian > 1e-9;
  return out;
}

ConstancyDiagnostic constancy_diagnostic(const IntertwiningClass& cls,
                                         double jacobian_tol) {
  ConstancyDiagnostic d;
  d.max_jacobian = cls.max_jacobian;
  for (const auto& r : cls.relations)
    if (r.cross && r.holds) d.holding_cross_relations.push_back(r.name);
  if (!d.holding_cross_relations.empty() && cls.max_jacobian > jacobian_tol) {
    d.fired = true;
    d.message =
        "a mixed product/golden relation holds on a non-constant map; "
        "the tolerance is too loose or the fixture is authored wrong";
  }
  return d;
}

namespace {

// Orthonormal frame of one eigendistribution: project the coordinate basis,
// then indefinite Gram-Schmidt. Fails (nullopt) when the restricted metric
// cannot supply `rank` unit vectors, e.g. when h is null on the
// distribution.
std::optional<std::vector<std::pair<Vec, int>>> distribution_frame(
    const Mat& h, const Mat& projector, int rank) {
  const int n = static_cast<int>(h.rows());
  std::vector<Vec> candidates;
  for (int j = 0; j < n; ++j) candidates.push_back(projector.col(j));
  GramSchmidtResult gs = gram_schmidt(h, candidates);
  if (!gs.complete || static_cast<int>(gs.vectors.size()) != rank)
    return std::nullopt;
  std::vector<std::pair<Vec, int>> out;
  for (size_t i = 0; i < gs.vectors.size(); ++i)
    out.push_back({gs.vectors[i], gs.signs[i]});
  return out;
}

}  // namespace

TensionResult tension_at(const ManifoldSpec& M, const ManifoldSpec& N,
                         const SmoothMapSpec& F, const Vec& p,
                         const StructureField* S_M, const StructureField* S_N,
                         int lambda) {
  MapContext ctx = map_context_at(M, N, F, p);
  const int nt = static_cast<int>(F.components.size());

  TensionResult out;
  out.point = p;
  out.tension = Vec::Zero(nt);
  FrameAt frame = orthonormal_frame_at(M, p);
  for (size_t i = 0; i < frame.vectors.size(); ++i)
    out.tension +=
        frame.signs[i] *
        second_fundamental_core(ctx, frame.vectors[i], frame.vectors[i]);
  out.tension_norm = out.tension.norm();

  if (S_M == nullptr) {
    out.split_note = "no source structure supplied";
    return out;
  }

  Projectors pr = eigenprojectors_at(*S_M, p);
  int r_plus = static_cast<int>(std::lround(pr.plus.trace()));
  int r_minus = static_cast<int>(std::lround(pr.minus.trace()));
  auto plus_frame = distribution_frame(ctx.source_geom.h, pr.plus, r_plus);
  auto minus_frame = distribution_frame(ctx.source_geom.h, pr.minus, r_minus);

  if (plus_frame && minus_frame) {
    // The direct split is only valid when the two frames are mutually
    // orthogonal, which holds for a pure metric.
    double cross = 0.0;
    for (const auto& [u, su] : *plus_frame)
      for (const auto& [v, sv] : *minus_frame)
        cross = std::max(cross, std::fabs(u.dot(ctx.source_geom.h * v)));
    if (cross < 1e-8) {
      out.d_tension_plus = Vec::Zero(nt);
      out.d_tension_minus = Vec::Zero(nt);
      for (const auto& [v, s] : *plus_frame)
        out.d_tension_plus += s * second_fundamental_core(ctx, v, v);
      for (const auto& [v, s] : *minus_frame)
        out.d_tension_minus += s * second_fundamental_core(ctx, v, v);
      out.split_available = true;
      out.plus_norm = out.d_tension_plus.norm();
      out.minus_norm = out.d_tension_minus.norm();
      out.split_note = "eigendistribution frames";
      return out;
    }
  }

  if (S_N != nullptr && (lambda == 1 || lambda == -1)) {
    Projectors prn = eigenprojectors_at(*S_N, ctx.jet.value);
    const Mat& first = (lambda == 1) ? prn.plus : prn.minus;
    out.d_tension_plus = first * out.tension;
    out.d_tension_minus = out.tension - out.d_tension_plus;
    out.split_available = true;
    out.plus_norm = out.d_tension_plus.norm();
    out.minus_norm = out.d_tension_minus.norm();
    out.split_note = "target projection through the intertwining relation";
    return out;
  }

  out.split_note =
      "restricted metric degenerate on the eigendistributions and no "
      "intertwining fallback available";
  return out;
}

double second_form_commutation_residual_at(const ManifoldSpec& M,
                                           const ManifoldSpec& N,
                                           const SmoothMapSpec& F,
                                           const StructureField& P_M,
                                           const StructureField& P_N,
                                           int lambda, const Vec& X,
                                           const Vec& Y, const Vec& p) {
  if (lambda != 1 && lambda != -1)
    throw MapError("commutation residual needs an intertwining map, lambda "
                   "must be +1 or -1");
  MapContext mctx = map_context_at(M, N, F, p);
  StructureContext pctx = structure_context_at(M, P_M, p);
  StructureContext qctx = structure_context_at(N, P_N, mctx.jet.value);
  const Mat& P = pctx.phi.value;
  const Mat& Q = qctx.phi.value;
  const Mat& J = mctx.jet.jac;

  Vec Xp = J * X;
  Vec Yp = J * Y;
  Vec lhs = second_fundamental_core(mctx, P * X, P * Y);
  Vec rhs = second_fundamental_core(mctx, X, Y);
  rhs += contract_endo_derivative(qctx.nabla, Q * Xp, Yp);
  rhs -= contract_endo_derivative(qctx.nabla, Yp, Q * Xp);
  Vec src_terms = contract_endo_derivative(pctx.nabla, P * X, Y) -
                  contract_endo_derivative(pctx.nabla, Y, P * X);
  rhs -= J * src_terms;
  double residual = (lhs - rhs).cwiseAbs().maxCoeff();

  Vec lhs2 = second_fundamental_core(mctx, P * X, P * X);
  Vec rhs2 = second_fundamental_core(mctx, X, X);
  Vec sq = s_operator_core(qctx, Xp, Xp);
  Vec sp = s_operator_core(pctx, X, X);
  rhs2 += Q * (sq - static_cast<double>(lambda) * (J * sp));
  residual = std::max(residual, (lhs2 - rhs2).cwiseAbs().maxCoeff());
  return residual;
}

namespace {

// Basis of the column space of a projector, as columns of an n x r matrix.
Mat projector_column_basis(const Mat& projector, int rank) {
  Eigen::ColPivHouseholderQR<Mat> qr(projector);
  qr.setThreshold(1e-10);
  if (qr.rank() != rank)
    throw MapError("eigendistribution rank does not match the projector trace");
  Mat q = qr.householderQ();
  return q.leftCols(rank);
}

}  // namespace

std::vector<Vec> adapted_hyperbolic_frame_at(const ManifoldSpec& M,
                                             const StructureField& P,
                                             const Vec& p) {
  const int n = static_cast<int>(p.size());
  if (n % 2 != 0)
    throw MapError("adapted frame needs an even dimensional chart");
  const int m = n / 2;
  Mat h = metric_value_at(M, p);
  Projectors pr = eigenprojectors_at(P, p);
  if (static_cast<int>(std::lround(pr.plus.trace())) != m)
    throw MapError("adapted frame needs a balanced structure, equal "
                   "eigendistribution dimensions");
  Mat U = projector_column_basis(pr.plus, m);
  Mat V = projector_column_basis(pr.minus, m);

  // Null eigendistributions pair nondegenerately through h; rescale one side
  // so that h(u_i, v_j) = delta_ij / 2, then u_i + v_j splits into the
  // claimed frame.
  Mat C = U.transpose() * h * V;
  Eigen::FullPivLU<Mat> lu(C);
  if (!lu.isInvertible())
    throw MapError("degenerate pairing between the eigendistributions");
  Mat Vhat = V * (0.5 * lu.inverse());

  Mat Pv = endo_value_at(P.endo, p);
  std::vector<Vec> frame;
  for (int i = 0; i < m; ++i) frame.push_back(U.col(i) + Vhat.col(i));

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double delta = (i == j) ? 1.0 : 0.0;
      Vec pi = Pv * frame[i];
      Vec pj = Pv * frame[j];
      if (std::fabs(frame[i].dot(h * frame[j]) - delta) > 1e-8 ||
          std::fabs(pi.dot(h * pj) + delta) > 1e-8 ||
          std::fabs(frame[i].dot(h * pj)) > 1e-8)
        throw MapError("adapted frame construction failed, the metric is "
                       "not hyperbolic for this structure");
    }
  }
  return frame;
}

double tension_structure_residual_at(const ManifoldSpec& M,
                                     const ManifoldSpec& N,
                                     const SmoothMapSpec& F,
                                     const StructureField& P_M,
                                     const StructureField& P_N, int lambda,
                                     const Vec& p) {
  if (lambda != 1 && lambda != -1)
    throw MapError("tension structure formula needs an intertwining map");
  MapContext mctx = map_context_at(M, N, F, p);
  StructureContext qctx = structure_context_at(N, P_N, mctx.jet.value);
  const Mat& Q = qctx.phi.value;
  const Mat& J = mctx.jet.jac;
  Mat Pv = endo_value_at(P_M.endo, p);

  std::vector<Vec> es = adapted_hyperbolic_frame_at(M, P_M, p);
  const int nt = static_cast<int>(F.components.size());
  Vec lhs = Vec::Zero(nt);
  Vec s_sum = Vec::Zero(nt);
  for (const Vec& e : es) {
    Vec pe = Pv * e;
    lhs += second_fundamental_core(mctx, e, e);
    lhs -= second_fundamental_core(mctx, pe, pe);
    Vec ep = J * e;
    s_sum += s_operator_core(qctx, ep, ep);
  }
  Vec divP = divergence_endo_at(M, P_M.endo, p);
  Vec rhs = -(Q * (s_sum - static_cast<double>(lambda) * (J * divP)));
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

HarmonicityReport harmonicity_report(const ManifoldSpec& M,
                                     const ManifoldSpec& N,
                                     const SmoothMapSpec& F,
                                     const StructureField* S_M,
                                     const StructureField* S_N, int lambda,
                                     const HarmonicityHypotheses& hyp,
                                     const std::vector<Vec>& points,
                                     double tol) {
  HarmonicityReport rep;
  rep.tol = tol;
  rep.split_everywhere = !points.empty();
  for (const Vec& p : points) {
    TensionResult t = tension_at(M, N, F, p, S_M, S_N, lambda);
    rep.max_tension_norm = std::max(rep.max_tension_norm, t.tension_norm);
    if (t.split_available) {
      rep.max_plus_norm = std::max(rep.max_plus_norm, t.plus_norm);
      rep.max_minus_norm = std::max(rep.max_minus_norm, t.minus_norm);
    } else {
      rep.split_everywhere = false;
    }
  }
  rep.harmonic = rep.max_tension_norm < tol;
  rep.plus_harmonic = rep.split_everywhere && rep.max_plus_norm < tol;
  rep.minus_harmonic = rep.split_everywhere && rep.max_minus_norm < tol;
  rep.equivalence_applicable = hyp.source_semi_decomposable &&
                               hyp.target_vidal_plus &&
                               hyp.target_vidal_minus && rep.split_everywhere;
  if (rep.equivalence_applicable)
    rep.equivalence_holds =
        rep.harmonic == (rep.plus_harmonic && rep.minus_harmonic);
  if (!rep.split_everywhere)
    rep.note = "eigen split unavailable at some sample points";
  else if (!rep.equivalence_applicable)
    rep.note = "harmonicity equivalence hypotheses not satisfied";
  return rep;
}

}  // namespace golden
