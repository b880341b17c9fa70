#pragma once

#include "golden/geometry.hpp"
#include "golden/structures.hpp"

namespace golden {

/// Bundle of pointwise data shared by the operator evaluations: Levi-Civita
/// data of the metric, first-order data of the structure tensor and its
/// covariant derivative nabla[a] = (nabla_a phi).
struct StructureContext {
  PointGeometry geom;
  EndoJet phi;
  std::vector<Mat> nabla;
};

StructureContext structure_context_at(const ManifoldSpec& M,
                                      const StructureField& S, const Vec& p);

/// TwoTensorJet view of the metric inside a context.
TwoTensorJet metric_jet(const PointGeometry& G);

// -- Nijenhuis tensor ------------------------------------------------------

/// Bracket form, valid for any (1,1) tensor field:
/// N(X,Y) = phi^2 [X,Y] + [phi X, phi Y] - phi [phi X, Y] - phi [X, phi Y].
Vec nijenhuis_core(const EndoJet& phi, const FieldJet& X, const FieldJet& Y);
Vec nijenhuis_at(const StructureField& S, const VectorFieldSpec& X,
                 const VectorFieldSpec& Y, const Vec& p);

/// Torsion-free connection form for a product structure,
/// N_P(X,Y) = (nabla_PX P)Y - (nabla_PY P)X - P((nabla_X P)Y)
///            + P((nabla_Y P)X).
/// A golden structure is routed through its twin product structure and
/// scaled by 5/4, since 5 N_P = 4 N_G for a twin pair.
Vec nijenhuis_connection_core(const StructureContext& ctx, const Vec& X,
                              const Vec& Y);
Vec nijenhuis_connection_at(const ManifoldSpec& M, const StructureField& S,
                            const Vec& X, const Vec& Y, const Vec& p);

// -- Lie derivative --------------------------------------------------------

/// (L_B phi)^k_j = B^i d_i phi^k_j - phi^i_j d_i B^k + phi^k_i d_j B^i
/// as a matrix.
Mat lie_derivative_endo(const EndoJet& phi, const FieldJet& B);
Mat lie_derivative_endo_at(const StructureField& S, const VectorFieldSpec& B,
                           const Vec& p);

// -- Tachibana operator and its symmetrization -----------------------------

/// (phi_phi u)(X,Y,Z) = (phi X)(u(Y,Z)) - X(u(phi Y, Z))
///                      + u((L_Y phi)X, Z) + u(Y, (L_Z phi)X).
/// Despite the derivatives this is tensorial in X, Y and Z.
double tachibana_core(const EndoJet& phi, const TwoTensorJet& u,
                      const FieldJet& X, const FieldJet& Y, const FieldJet& Z);
double tachibana_at(const ManifoldSpec& M, const StructureField& S,
                    const CovariantTwoTensorField& u, const VectorFieldSpec& X,
                    const VectorFieldSpec& Y, const VectorFieldSpec& Z,
                    const Vec& p);
double tachibana_metric_at(const ManifoldSpec& M, const StructureField& S,
                           const VectorFieldSpec& X, const VectorFieldSpec& Y,
                           const VectorFieldSpec& Z, const Vec& p);

/// Psi u (X,Y,Z) = (phi_phi u)(X,Y,Z) + (phi_phi u)(Z,Y,X).
double psi_core(const EndoJet& phi, const TwoTensorJet& u, const FieldJet& X,
                const FieldJet& Y, const FieldJet& Z);
double psi_metric_at(const ManifoldSpec& M, const StructureField& S,
                     const VectorFieldSpec& X, const VectorFieldSpec& Y,
                     const VectorFieldSpec& Z, const Vec& p);

/// Residual of the exchange condition on Psi of the metric,
/// Psi(X,Y,Z) - Psi(Y,X,Z) - Psi(phi Y, phi X, Z).
/// phi Y and phi X enter through constant extensions of their values, which
/// is legitimate because Psi is a tensor.
double star_condition_residual_at(const ManifoldSpec& M,
                                  const StructureField& S,
                                  const VectorFieldSpec& X,
                                  const VectorFieldSpec& Y,
                                  const VectorFieldSpec& Z, const Vec& p);

// -- S operator ------------------------------------------------------------

/// S_phi(X,Y) = (nabla_X phi)Y + phi (nabla_{phi X} phi) Y.
Vec s_operator_core(const StructureContext& ctx, const Vec& X, const Vec& Y);
Vec s_operator_at(const ManifoldSpec& M, const StructureField& S, const Vec& X,
                  const Vec& Y, const Vec& p);

// -- fundamental form derivative -------------------------------------------

/// Covariant derivative of the 2-form Omega_jk = (P^T h)_jk:
/// out[a] = d_a Omega - Gamma_a^T Omega - Omega Gamma_a.
std::vector<Mat> covariant_form_tensor(const PointGeometry& G,
                                       const EndoJet& P);

/// d Omega (X,Y,Z) = (nabla_X Omega)(Y,Z) - (nabla_Y Omega)(X,Z)
///                   + (nabla_Z Omega)(X,Y), with Omega the fundamental
/// 2-form of the structure. Golden structures use the form of their twin
/// product structure, which is the one their Kaehler condition refers to.
double d_omega_core(const StructureContext& ctx, const Vec& X, const Vec& Y,
                    const Vec& Z);
double d_omega_at(const ManifoldSpec& M, const StructureField& S, const Vec& X,
                  const Vec& Y, const Vec& Z, const Vec& p);

}  // namespace golden
