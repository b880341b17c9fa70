#pragma once

#include <string>

#include "golden/geometry.hpp"

namespace golden {

enum class StructureKind { Product, Golden };

/// A polynomial structure field: P with P^2 = I (Product) or G with
/// G^2 = G + I (Golden). Eigenvalues are (1,-1) resp. (sigma, sigbar).
struct StructureField {
  StructureKind kind = StructureKind::Product;
  EndomorphismField endo;

  int dim() const { return static_cast<int>(endo.components.size()); }
  double eigen_plus() const {
    return kind == StructureKind::Product ? 1.0 : kGoldenRatio;
  }
  double eigen_minus() const {
    return kind == StructureKind::Product ? -1.0 : kGoldenRatioConj;
  }
};

/// max-abs residual of the defining polynomial at p:
/// |phi^2 - I| (Product) or |phi^2 - phi - I| (Golden).
double polynomial_residual_at(const StructureField& S, const Vec& p);

/// The twin under G = (I + sqrt5 P)/2 <-> P = (2G - I)/sqrt5. Components are
/// rebuilt symbolically as affine images of the input expressions, so the
/// result is a full structure field, not a pointwise matrix.
StructureField twin_of(const StructureField& S);

/// P -> -P, G -> I - G. Swaps the eigendistributions, keeps the kind.
StructureField conjugate_of(const StructureField& S);

/// Pointwise value of the conjugate applied to an already evaluated matrix.
Mat conjugate_value(const StructureField& S, const Mat& value);

struct Projectors {
  Mat plus;   // onto the eigen_plus distribution
  Mat minus;  // complement
};

/// pi_+ = (phi - eigen_minus I)/(eigen_plus - eigen_minus), pi_- = I - pi_+.
Projectors eigenprojectors_at(const StructureField& S, const Vec& p);
Projectors projectors_from_value(const StructureField& S, const Mat& phi);

struct CompatibilityVerdict {
  bool pure = false;
  bool hyperbolic = false;
  double pure_residual = 0.0;        // max-abs of h phi - phi^T h
  double hyperbolic_residual = 0.0;  // max-abs of h phi - conj(phi)^T h
};

CompatibilityVerdict compatibility_at(const ManifoldSpec& M,
                                      const StructureField& S, const Vec& p,
                                      double tol = 1e-9);

struct FormValue {
  double value = 0.0;
  bool compat_warning = false;  // set when h is neither pure nor hyperbolic
};

/// Fundamental 2-form Omega(X,Y) = h(PX, Y) for Product structures; Golden
/// structures are routed through their twin so the form is the one attached
/// to the associated product structure.
FormValue fundamental_form_at(const ManifoldSpec& M, const StructureField& S,
                              const Vec& X, const Vec& Y, const Vec& p);

/// max over |sigma^2-sigma-1|, |sigbar^2-sigbar-1|, |sigma*sigbar+1|,
/// |sigma+sigbar-1|. Startup self-check; ~1e-16.
double structure_constant_self_check();

}  // namespace golden
