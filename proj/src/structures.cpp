#include "golden/structures.hpp"

#include <cmath>

namespace golden {

double polynomial_residual_at(const StructureField& S, const Vec& p) {
  Mat phi = endo_value_at(S.endo, p);
  const int n = static_cast<int>(phi.rows());
  Mat residual;
  if (S.kind == StructureKind::Product) {
    residual = phi * phi - Mat::Identity(n, n);
  } else {
    residual = phi * phi - phi - Mat::Identity(n, n);
  }
  return residual.cwiseAbs().maxCoeff();
}

namespace {

// Applies entry -> shift * delta_ij + scale * entry to every component.
EndomorphismField affine_endo(const EndomorphismField& E, double scale,
                              double shift) {
  const int n = static_cast<int>(E.components.size());
  EndomorphismField out;
  out.components.resize(n);
  for (int k = 0; k < n; ++k) {
    out.components[k].resize(n);
    for (int j = 0; j < n; ++j) {
      double diag = (k == j) ? shift : 0.0;
      out.components[k][j] = scale_shift(E.components[k][j], scale, diag);
    }
  }
  return out;
}

}  // namespace

StructureField twin_of(const StructureField& S) {
  StructureField out;
  if (S.kind == StructureKind::Product) {
    // G = (1/2) I + (sqrt5/2) P
    out.kind = StructureKind::Golden;
    out.endo = affine_endo(S.endo, 0.5 * kSqrt5, 0.5);
  } else {
    // P = (2G - I)/sqrt5
    out.kind = StructureKind::Product;
    out.endo = affine_endo(S.endo, 2.0 / kSqrt5, -1.0 / kSqrt5);
  }
  return out;
}

StructureField conjugate_of(const StructureField& S) {
  StructureField out;
  out.kind = S.kind;
  if (S.kind == StructureKind::Product) {
    out.endo = affine_endo(S.endo, -1.0, 0.0);
  } else {
    out.endo = affine_endo(S.endo, -1.0, 1.0);
  }
  return out;
}

Mat conjugate_value(const StructureField& S, const Mat& value) {
  const int n = static_cast<int>(value.rows());
  if (S.kind == StructureKind::Product) return -value;
  return Mat::Identity(n, n) - value;
}

Projectors projectors_from_value(const StructureField& S, const Mat& phi) {
  const int n = static_cast<int>(phi.rows());
  const double a = S.eigen_plus();
  const double b = S.eigen_minus();
  Projectors pr;
  pr.plus = (phi - b * Mat::Identity(n, n)) / (a - b);
  pr.minus = Mat::Identity(n, n) - pr.plus;
  return pr;
}

Projectors eigenprojectors_at(const StructureField& S, const Vec& p) {
  return projectors_from_value(S, endo_value_at(S.endo, p));
}

CompatibilityVerdict compatibility_at(const ManifoldSpec& M,
                                      const StructureField& S, const Vec& p,
                                      double tol) {
  Mat h = metric_value_at(M, p);
  Mat phi = endo_value_at(S.endo, p);
  Mat conj = conjugate_value(S, phi);
  CompatibilityVerdict v;
  v.pure_residual = (h * phi - phi.transpose() * h).cwiseAbs().maxCoeff();
  v.hyperbolic_residual = (h * phi - conj.transpose() * h).cwiseAbs().maxCoeff();
  v.pure = v.pure_residual <= tol;
  v.hyperbolic = v.hyperbolic_residual <= tol;
  return v;
}

FormValue fundamental_form_at(const ManifoldSpec& M, const StructureField& S,
                              const Vec& X, const Vec& Y, const Vec& p) {
  const StructureField* product = &S;
  StructureField twin_storage;
  if (S.kind == StructureKind::Golden) {
    twin_storage = twin_of(S);
    product = &twin_storage;
  }
  Mat h = metric_value_at(M, p);
  Mat P = endo_value_at(product->endo, p);
  FormValue out;
  out.value = (P * X).dot(h * Y);
  CompatibilityVerdict v = compatibility_at(M, *product, p);
  out.compat_warning = !(v.pure || v.hyperbolic);
  return out;
}

double structure_constant_self_check() {
  const double s = kGoldenRatio;
  const double t = kGoldenRatioConj;
  double worst = std::fabs(s * s - s - 1.0);
  worst = std::max(worst, std::fabs(t * t - t - 1.0));
  worst = std::max(worst, std::fabs(s * t + 1.0));
  worst = std::max(worst, std::fabs(s + t - 1.0));
  return worst;
}

}  // namespace golden
