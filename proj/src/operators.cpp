#include "golden/operators.hpp"

namespace golden {

StructureContext structure_context_at(const ManifoldSpec& M,
                                      const StructureField& S, const Vec& p) {
  StructureContext ctx;
  ctx.geom = point_geometry_at(M, p);
  ctx.phi = endo_jet_at(S.endo, p);
  ctx.nabla = covariant_endo_tensor(ctx.geom, ctx.phi);
  return ctx;
}

TwoTensorJet metric_jet(const PointGeometry& G) {
  TwoTensorJet u;
  u.value = G.h;
  u.deriv = G.dh;
  return u;
}

Vec nijenhuis_core(const EndoJet& phi, const FieldJet& X, const FieldJet& Y) {
  FieldJet phiX = apply_endo_jet(phi, X);
  FieldJet phiY = apply_endo_jet(phi, Y);
  Vec bXY = lie_bracket_jets(X, Y);
  Vec bPXPY = lie_bracket_jets(phiX, phiY);
  Vec bPXY = lie_bracket_jets(phiX, Y);
  Vec bXPY = lie_bracket_jets(X, phiY);
  return phi.value * (phi.value * bXY) + bPXPY - phi.value * (bPXY + bXPY);
}

Vec nijenhuis_at(const StructureField& S, const VectorFieldSpec& X,
                 const VectorFieldSpec& Y, const Vec& p) {
  EndoJet phi = endo_jet_at(S.endo, p);
  return nijenhuis_core(phi, field_jet_at(X, p), field_jet_at(Y, p));
}

Vec nijenhuis_connection_core(const StructureContext& ctx, const Vec& X,
                              const Vec& Y) {
  const Mat& P = ctx.phi.value;
  Vec t1 = contract_endo_derivative(ctx.nabla, P * X, Y);
  Vec t2 = contract_endo_derivative(ctx.nabla, P * Y, X);
  Vec t3 = P * contract_endo_derivative(ctx.nabla, X, Y);
  Vec t4 = P * contract_endo_derivative(ctx.nabla, Y, X);
  return t1 - t2 - t3 + t4;
}

Vec nijenhuis_connection_at(const ManifoldSpec& M, const StructureField& S,
                            const Vec& X, const Vec& Y, const Vec& p) {
  if (S.kind == StructureKind::Golden) {
    StructureField twin = twin_of(S);
    StructureContext ctx = structure_context_at(M, twin, p);
    return 1.25 * nijenhuis_connection_core(ctx, X, Y);
  }
  StructureContext ctx = structure_context_at(M, S, p);
  return nijenhuis_connection_core(ctx, X, Y);
}

Mat lie_derivative_endo(const EndoJet& phi, const FieldJet& B) {
  const int n = static_cast<int>(phi.value.rows());
  Mat L = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) L += B.value(i) * phi.deriv[i];
  L -= B.jac * phi.value;
  L += phi.value * B.jac;
  return L;
}

Mat lie_derivative_endo_at(const StructureField& S, const VectorFieldSpec& B,
                           const Vec& p) {
  return lie_derivative_endo(endo_jet_at(S.endo, p), field_jet_at(B, p));
}

namespace {

// Directional derivative of the scalar q -> u(Y,Z)(q) along the value of A.
double scalar_derivative(const TwoTensorJet& u, const FieldJet& Y,
                         const FieldJet& Z, const Vec& A) {
  const int n = static_cast<int>(A.size());
  double out = 0.0;
  for (int a = 0; a < n; ++a) {
    double da = Y.value.dot(u.deriv[a] * Z.value) +
                Y.jac.col(a).dot(u.value * Z.value) +
                Y.value.dot(u.value * Z.jac.col(a));
    out += A(a) * da;
  }
  return out;
}

}  // namespace

double tachibana_core(const EndoJet& phi, const TwoTensorJet& u,
                      const FieldJet& X, const FieldJet& Y, const FieldJet& Z) {
  FieldJet phiY = apply_endo_jet(phi, Y);
  double t1 = scalar_derivative(u, Y, Z, phi.value * X.value);
  double t2 = scalar_derivative(u, phiY, Z, X.value);
  Vec lyx = lie_derivative_endo(phi, Y) * X.value;
  Vec lzx = lie_derivative_endo(phi, Z) * X.value;
  double t3 = lyx.dot(u.value * Z.value);
  double t4 = Y.value.dot(u.value * lzx);
  return t1 - t2 + t3 + t4;
}

double tachibana_at(const ManifoldSpec& M, const StructureField& S,
                    const CovariantTwoTensorField& u, const VectorFieldSpec& X,
                    const VectorFieldSpec& Y, const VectorFieldSpec& Z,
                    const Vec& p) {
  (void)M;
  EndoJet phi = endo_jet_at(S.endo, p);
  return tachibana_core(phi, two_tensor_jet_at(u, p), field_jet_at(X, p),
                        field_jet_at(Y, p), field_jet_at(Z, p));
}

double tachibana_metric_at(const ManifoldSpec& M, const StructureField& S,
                           const VectorFieldSpec& X, const VectorFieldSpec& Y,
                           const VectorFieldSpec& Z, const Vec& p) {
  PointGeometry G = point_geometry_at(M, p);
  EndoJet phi = endo_jet_at(S.endo, p);
  return tachibana_core(phi, metric_jet(G), field_jet_at(X, p),
                        field_jet_at(Y, p), field_jet_at(Z, p));
}

double psi_core(const EndoJet& phi, const TwoTensorJet& u, const FieldJet& X,
                const FieldJet& Y, const FieldJet& Z) {
  return tachibana_core(phi, u, X, Y, Z) + tachibana_core(phi, u, Z, Y, X);
}

double psi_metric_at(const ManifoldSpec& M, const StructureField& S,
                     const VectorFieldSpec& X, const VectorFieldSpec& Y,
                     const VectorFieldSpec& Z, const Vec& p) {
  PointGeometry G = point_geometry_at(M, p);
  EndoJet phi = endo_jet_at(S.endo, p);
  return psi_core(phi, metric_jet(G), field_jet_at(X, p), field_jet_at(Y, p),
                  field_jet_at(Z, p));
}

double star_condition_residual_at(const ManifoldSpec& M,
                                  const StructureField& S,
                                  const VectorFieldSpec& X,
                                  const VectorFieldSpec& Y,
                                  const VectorFieldSpec& Z, const Vec& p) {
  PointGeometry G = point_geometry_at(M, p);
  EndoJet phi = endo_jet_at(S.endo, p);
  TwoTensorJet u = metric_jet(G);
  FieldJet Xj = field_jet_at(X, p);
  FieldJet Yj = field_jet_at(Y, p);
  FieldJet Zj = field_jet_at(Z, p);
  const int n = static_cast<int>(G.p.size());
  FieldJet phiXc{phi.value * Xj.value, Mat::Zero(n, n)};
  FieldJet phiYc{phi.value * Yj.value, Mat::Zero(n, n)};
  double lhs = psi_core(phi, u, Xj, Yj, Zj);
  double rhs = psi_core(phi, u, Yj, Xj, Zj) + psi_core(phi, u, phiYc, phiXc, Zj);
  return lhs - rhs;
}

Vec s_operator_core(const StructureContext& ctx, const Vec& X, const Vec& Y) {
  const Mat& phi = ctx.phi.value;
  Vec first = contract_endo_derivative(ctx.nabla, X, Y);
  Vec second = phi * contract_endo_derivative(ctx.nabla, phi * X, Y);
  return first + second;
}

Vec s_operator_at(const ManifoldSpec& M, const StructureField& S, const Vec& X,
                  const Vec& Y, const Vec& p) {
  StructureContext ctx = structure_context_at(M, S, p);
  return s_operator_core(ctx, X, Y);
}

std::vector<Mat> covariant_form_tensor(const PointGeometry& G,
                                       const EndoJet& P) {
  const int n = static_cast<int>(G.p.size());
  Mat omega = P.value.transpose() * G.h;
  std::vector<Mat> out(n);
  for (int a = 0; a < n; ++a) {
    Mat domega = P.deriv[a].transpose() * G.h + P.value.transpose() * G.dh[a];
    Mat ga = G.gamma.direction_matrix(a);
    out[a] = domega - ga.transpose() * omega - omega * ga;
  }
  return out;
}

double d_omega_core(const StructureContext& ctx, const Vec& X, const Vec& Y,
                    const Vec& Z) {
  std::vector<Mat> dOm = covariant_form_tensor(ctx.geom, ctx.phi);
  const int n = static_cast<int>(X.size());
  double out = 0.0;
  for (int a = 0; a < n; ++a) {
    out += X(a) * Y.dot(dOm[a] * Z);
    out -= Y(a) * X.dot(dOm[a] * Z);
    out += Z(a) * X.dot(dOm[a] * Y);
  }
  return out;
}

double d_omega_at(const ManifoldSpec& M, const StructureField& S, const Vec& X,
                  const Vec& Y, const Vec& Z, const Vec& p) {
  if (S.kind == StructureKind::Golden) {
    StructureField twin = twin_of(S);
    StructureContext ctx = structure_context_at(M, twin, p);
    return d_omega_core(ctx, X, Y, Z);
  }
  StructureContext ctx = structure_context_at(M, S, p);
  return d_omega_core(ctx, X, Y, Z);
}

}  // namespace golden
