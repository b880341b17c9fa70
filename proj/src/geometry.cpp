#include "golden/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace golden {

namespace {

constexpr double kDegenerateTol = 1e-10;

}  // namespace

Mat Christoffel::direction_matrix(int a) const {
  Mat m(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) m(k, l) = g[k](a, l);
  return m;
}

Mat metric_value_at(const ManifoldSpec& M, const Vec& p) {
  Mat h(M.dim, M.dim);
  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < M.dim; ++j) h(i, j) = M.metric[i][j].evaluate(p);
  return h;
}

namespace {

Mat invert_metric(const ManifoldSpec& M, const Mat& h) {
  Eigen::PartialPivLU<Mat> lu(h);
  if (std::abs(lu.determinant()) <= kDegenerateTol)
    throw GeometryError("degenerate metric on '" + M.name + "'");
  return lu.inverse();
}

}  // namespace

MetricAt metric_at(const ManifoldSpec& M, const Vec& p) {
  const Mat h = metric_value_at(M, p);
  return {h, invert_metric(M, h)};
}

PointGeometry point_geometry_at(const ManifoldSpec& M, const Vec& p) {
  const int n = M.dim;
  PointGeometry G;
  G.p = p;
  G.h = Mat(n, n);
  G.dh.assign(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Jet2 jet = M.metric[i][j].jet(p);
      G.h(i, j) = jet.value;
      for (int k = 0; k < n; ++k) G.dh[k](i, j) = jet.grad(k);
    }
  }
  G.hinv = invert_metric(M, G.h);

  // Gamma^k_ij = 1/2 h^{kl} (d_i h_jl + d_j h_il - d_l h_ij)
  G.gamma.n = n;
  G.gamma.g.assign(n, Mat::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += G.hinv(k, l) *
               (G.dh[i](j, l) + G.dh[j](i, l) - G.dh[l](i, j));
        G.gamma.g[k](i, j) = 0.5 * s;
      }
  return G;
}

Christoffel christoffel_at(const ManifoldSpec& M, const Vec& p) {
  return point_geometry_at(M, p).gamma;
}

FieldJet field_jet_at(const VectorFieldSpec& X, const Vec& p) {
  const int n = static_cast<int>(p.size());
  const int m = static_cast<int>(X.components.size());
  FieldJet f;
  f.value = Vec(m);
  f.jac = Mat(m, n);
  for (int k = 0; k < m; ++k) {
    const Jet2 jet = X.components[k].jet(p);
    f.value(k) = jet.value;
    f.jac.row(k) = jet.grad.transpose();
  }
  return f;
}

EndoJet endo_jet_at(const EndomorphismField& phi, const Vec& p) {
  const int n = static_cast<int>(phi.components.size());
  EndoJet e;
  e.value = Mat(n, n);
  e.deriv.assign(p.size(), Mat::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const Jet2 jet = phi.components[k][j].jet(p);
      e.value(k, j) = jet.value;
      for (int i = 0; i < p.size(); ++i) e.deriv[i](k, j) = jet.grad(i);
    }
  return e;
}

TwoTensorJet two_tensor_jet_at(const CovariantTwoTensorField& u, const Vec& p) {
  const int n = static_cast<int>(u.components.size());
  TwoTensorJet t;
  t.value = Mat(n, n);
  t.deriv.assign(p.size(), Mat::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Jet2 jet = u.components[i][j].jet(p);
      t.value(i, j) = jet.value;
      for (int k = 0; k < p.size(); ++k) t.deriv[k](i, j) = jet.grad(k);
    }
  return t;
}

Mat endo_value_at(const EndomorphismField& phi, const Vec& p) {
  const int n = static_cast<int>(phi.components.size());
  Mat m(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) m(k, j) = phi.components[k][j].evaluate(p);
  return m;
}

FieldJet apply_endo_jet(const EndoJet& phi, const FieldJet& X) {
  FieldJet out;
  out.value = phi.value * X.value;
  out.jac = phi.value * X.jac;
  for (std::size_t i = 0; i < phi.deriv.size(); ++i)
    out.jac.col(i) += phi.deriv[i] * X.value;
  return out;
}

Vec lie_bracket_jets(const FieldJet& X, const FieldJet& Y) {
  return Y.jac * X.value - X.jac * Y.value;
}

Vec covariant_vector_jets(const Christoffel& gamma, const Vec& A,
                          const FieldJet& B) {
  Vec out = B.jac * A;
  for (int k = 0; k < gamma.n; ++k) out(k) += A.dot(gamma.g[k] * B.value);
  return out;
}

std::vector<Mat> covariant_endo_tensor(const PointGeometry& G,
                                       const EndoJet& phi) {
  const int n = G.gamma.n;
  std::vector<Mat> D(n);
  for (int a = 0; a < n; ++a) {
    const Mat Ga = G.gamma.direction_matrix(a);
    D[a] = phi.deriv[a] + Ga * phi.value - phi.value * Ga;
  }
  return D;
}

Vec contract_endo_derivative(const std::vector<Mat>& D, const Vec& X,
                             const Vec& Y) {
  Vec out = Vec::Zero(Y.size());
  for (std::size_t a = 0; a < D.size(); ++a) out += X(a) * (D[a] * Y);
  return out;
}

Vec lie_bracket_at(const VectorFieldSpec& X, const VectorFieldSpec& Y,
                   const Vec& p) {
  return lie_bracket_jets(field_jet_at(X, p), field_jet_at(Y, p));
}

Vec covariant_derivative_vector_at(const ManifoldSpec& M,
                                   const VectorFieldSpec& X,
                                   const VectorFieldSpec& Y, const Vec& p) {
  const PointGeometry G = point_geometry_at(M, p);
  return covariant_vector_jets(G.gamma, field_jet_at(X, p).value,
                               field_jet_at(Y, p));
}

Vec covariant_derivative_endo_at(const ManifoldSpec& M,
                                 const EndomorphismField& phi,
                                 const VectorFieldSpec& X,
                                 const VectorFieldSpec& Y, const Vec& p) {
  const PointGeometry G = point_geometry_at(M, p);
  const auto D = covariant_endo_tensor(G, endo_jet_at(phi, p));
  return contract_endo_derivative(D, field_jet_at(X, p).value,
                                  field_jet_at(Y, p).value);
}

FrameAt orthonormal_frame_at(const ManifoldSpec& M, const Vec& p) {
  const Mat h = metric_value_at(M, p);
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  FrameAt frame;
  frame.point = p;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < M.dim; ++i) {
      const double lam = es.eigenvalues()(i);
      if (std::abs(lam) <= kDegenerateTol)
        throw GeometryError("degenerate frame on '" + M.name +
                            "': metric eigenvalue near zero");
      const bool positive = lam > 0.0;
      if ((pass == 0) != positive) continue;  // +1 entries first
      frame.vectors.push_back(es.eigenvectors().col(i) / std::sqrt(std::abs(lam)));
      frame.signs.push_back(positive ? 1 : -1);
    }
  }
  return frame;
}

std::pair<int, int> signature_at(const ManifoldSpec& M, const Vec& p) {
  const Mat h = metric_value_at(M, p);
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  int plus = 0, minus = 0;
  for (int i = 0; i < M.dim; ++i) {
    const double lam = es.eigenvalues()(i);
    if (std::abs(lam) <= kDegenerateTol)
      throw GeometryError("degenerate metric on '" + M.name +
                          "': signature undefined");
    (lam > 0.0 ? plus : minus)++;
  }
  return {plus, minus};
}

Vec divergence_endo_at(const ManifoldSpec& M, const EndomorphismField& phi,
                       const Vec& p) {
  const PointGeometry G = point_geometry_at(M, p);
  const auto D = covariant_endo_tensor(G, endo_jet_at(phi, p));
  const FrameAt frame = orthonormal_frame_at(M, p);
  // div phi = sum_i h(e_i,e_i) (nabla_{e_i} phi) e_i over an orthonormal frame
  Vec div = Vec::Zero(M.dim);
  for (std::size_t i = 0; i < frame.vectors.size(); ++i)
    div += frame.signs[i] *
           contract_endo_derivative(D, frame.vectors[i], frame.vectors[i]);
  return div;
}

GramSchmidtResult gram_schmidt(const Mat& h, const std::vector<Vec>& candidates,
                               double pivot_tol, double drop_tol) {
  GramSchmidtResult out;
  std::vector<Vec> rem = candidates;
  for (;;) {
    std::vector<Vec> kept;
    for (const Vec& r : rem)
      if (r.lpNorm<Eigen::Infinity>() >= drop_tol) kept.push_back(r);
    rem = std::move(kept);
    if (rem.empty()) return out;

    int best = -1;
    double best_q = 0.0;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      const double q = std::abs(rem[i].dot(h * rem[i]));
      if (q > best_q) {
        best_q = q;
        best = static_cast<int>(i);
      }
    }
    if (best < 0 || best_q < pivot_tol) {
      out.complete = false;  // metric numerically null in remaining directions
      return out;
    }
    const double q = rem[best].dot(h * rem[best]);
    const int sign = q > 0.0 ? 1 : -1;
    const Vec u = rem[best] / std::sqrt(std::abs(q));
    rem.erase(rem.begin() + best);
    for (Vec& r : rem) r -= sign * (r.dot(h * u)) * u;
    out.vectors.push_back(u);
    out.signs.push_back(sign);
  }
}

VectorFieldSpec constant_field(const Vec& v) {
  VectorFieldSpec f;
  for (int k = 0; k < v.size(); ++k)
    f.components.push_back(ExpressionAst::number(v(k)));
  return f;
}

VectorFieldSpec coordinate_field(int dim, int index) {
  Vec v = Vec::Zero(dim);
  v(index) = 1.0;
  return constant_field(v);
}

VectorFieldSpec affine_field(const Vec& a, const Mat& B) {
  VectorFieldSpec f;
  for (int k = 0; k < a.size(); ++k) {
    ExpressionAst e = ExpressionAst::number(a(k));
    for (int i = 0; i < B.cols(); ++i) {
      if (B(k, i) == 0.0) continue;
      e = ExpressionAst::binary(
          BinaryOp::Add, e,
          ExpressionAst::binary(BinaryOp::Mul, ExpressionAst::number(B(k, i)),
                                ExpressionAst::variable(i)));
    }
    f.components.push_back(std::move(e));
  }
  return f;
}

VectorFieldSpec random_affine_field(int dim, Rng& rng) {
  Vec a(dim);
  Mat B(dim, dim);
  for (int k = 0; k < dim; ++k) a(k) = rng.uniform(-1.0, 1.0);
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i) B(k, i) = rng.uniform(-1.0, 1.0);
  return affine_field(a, B);
}

VectorFieldSpec endo_apply_field(const EndomorphismField& phi,
                                 const VectorFieldSpec& X) {
  VectorFieldSpec out;
  const int n = static_cast<int>(phi.components.size());
  for (int k = 0; k < n; ++k) {
    ExpressionAst sum;
    for (int j = 0; j < n; ++j) {
      ExpressionAst term = ExpressionAst::binary(
          BinaryOp::Mul, phi.components[k][j], X.components[j]);
      sum = sum.empty() ? term
                        : ExpressionAst::binary(BinaryOp::Add, sum, term);
    }
    out.components.push_back(std::move(sum));
  }
  return out;
}

void validate_metric_at(const ManifoldSpec& M, const Vec& p) {
  const Mat h = metric_value_at(M, p);
  for (int i = 0; i < M.dim; ++i)
    for (int j = i + 1; j < M.dim; ++j)
      if (std::abs(h(i, j) - h(j, i)) > 1e-12)
        throw GeometryError("metric on '" + M.name +
                            "' is not symmetric at a sampled point");
  invert_metric(M, h);
}

}  // namespace golden
