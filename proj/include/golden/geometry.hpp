#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "golden/expr.hpp"
#include "golden/sampling.hpp"
#include "golden/types.hpp"

namespace golden {

/// Degenerate metrics, null Gram-Schmidt pivots, rank defects.
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A chart: coordinate names, a sampling box and a metric given entrywise
/// as expressions over the coordinates. One global chart per manifold;
/// points are raw coordinate tuples.
struct ManifoldSpec {
  std::string name;
  int dim = 0;
  std::vector<std::string> coordinate_names;
  std::vector<Interval> sample_box;
  std::vector<std::vector<ExpressionAst>> metric;  // metric[i][j] = h_ij
};

struct VectorFieldSpec {
  std::vector<ExpressionAst> components;  // X^k
};

/// components[k][j] = coefficient of d_k in the image of d_j, i.e. the
/// matrix entry (row k, column j).
struct EndomorphismField {
  std::vector<std::vector<ExpressionAst>> components;
};

struct CovariantTwoTensorField {
  std::vector<std::vector<ExpressionAst>> components;  // u_ij
};

struct MetricAt {
  Mat h;
  Mat hinv;
};

struct Christoffel {
  int n = 0;
  std::vector<Mat> g;  // g[k](i,j) = Gamma^k_ij
  double operator()(int k, int i, int j) const { return g[k](i, j); }
  /// (Gamma_a)^k_l = Gamma^k_{a l} as a matrix in (k,l).
  Mat direction_matrix(int a) const;
};

/// Orthonormal frame at a point: h(v_i, v_j) = signs[i] * delta_ij,
/// +1 entries first.
struct FrameAt {
  Vec point;
  std::vector<Vec> vectors;
  std::vector<int> signs;
};

// Pointwise first-order data of fields and endomorphisms.
struct FieldJet {
  Vec value;  // X^k
  Mat jac;    // jac(k,i) = d_i X^k
};

struct EndoJet {
  Mat value;                // phi^k_j
  std::vector<Mat> deriv;   // deriv[i] = d_i phi
};

struct TwoTensorJet {
  Mat value;                // u_ij
  std::vector<Mat> deriv;   // deriv[k] = d_k u
};

/// Everything the Levi-Civita machinery needs at one point.
struct PointGeometry {
  Vec p;
  Mat h;
  Mat hinv;
  std::vector<Mat> dh;  // dh[k] = d_k h
  Christoffel gamma;
};

// -- evaluation ------------------------------------------------------------

Mat metric_value_at(const ManifoldSpec& M, const Vec& p);
MetricAt metric_at(const ManifoldSpec& M, const Vec& p);
PointGeometry point_geometry_at(const ManifoldSpec& M, const Vec& p);
Christoffel christoffel_at(const ManifoldSpec& M, const Vec& p);

FieldJet field_jet_at(const VectorFieldSpec& X, const Vec& p);
EndoJet endo_jet_at(const EndomorphismField& phi, const Vec& p);
TwoTensorJet two_tensor_jet_at(const CovariantTwoTensorField& u, const Vec& p);
Mat endo_value_at(const EndomorphismField& phi, const Vec& p);

/// (phi X) as pointwise first-order data:
/// d_i(phi X)^k = d_i phi^k_j X^j + phi^k_j d_i X^j.
FieldJet apply_endo_jet(const EndoJet& phi, const FieldJet& X);

/// [X,Y]^k = X^i d_i Y^k - Y^i d_i X^k from jets.
Vec lie_bracket_jets(const FieldJet& X, const FieldJet& Y);

/// (nabla_A B)^k = A^i d_i B^k + Gamma^k_ij A^i B^j. Tensorial in the
/// direction, so only A's value enters.
Vec covariant_vector_jets(const Christoffel& gamma, const Vec& A,
                          const FieldJet& B);

/// nabla phi as a rank-3 tensor: D[a] = d_a phi + [Gamma_a, phi].
std::vector<Mat> covariant_endo_tensor(const PointGeometry& G,
                                       const EndoJet& phi);

/// Contraction (nabla_X phi) Y from the tensor above.
Vec contract_endo_derivative(const std::vector<Mat>& D, const Vec& X,
                             const Vec& Y);

// -- module operations -----------------------------------------------------

Vec lie_bracket_at(const VectorFieldSpec& X, const VectorFieldSpec& Y,
                   const Vec& p);
Vec covariant_derivative_vector_at(const ManifoldSpec& M,
                                   const VectorFieldSpec& X,
                                   const VectorFieldSpec& Y, const Vec& p);
Vec covariant_derivative_endo_at(const ManifoldSpec& M,
                                 const EndomorphismField& phi,
                                 const VectorFieldSpec& X,
                                 const VectorFieldSpec& Y, const Vec& p);
FrameAt orthonormal_frame_at(const ManifoldSpec& M, const Vec& p);
std::pair<int, int> signature_at(const ManifoldSpec& M, const Vec& p);
Vec divergence_endo_at(const ManifoldSpec& M, const EndomorphismField& phi,
                       const Vec& p);

// -- frames ----------------------------------------------------------------

struct GramSchmidtResult {
  std::vector<Vec> vectors;
  std::vector<int> signs;
  bool complete = true;  // false when a null pivot stopped the sweep
};

/// Indefinite Gram-Schmidt over an arbitrary candidate list with greedy
/// pivoting on |h(v,v)| after projection. Candidates whose projected
/// Euclidean norm falls under `drop_tol` are discarded; a surviving sweep in
/// which every pivot is below `pivot_tol` reports complete = false.
GramSchmidtResult gram_schmidt(const Mat& h, const std::vector<Vec>& candidates,
                               double pivot_tol = 1e-10,
                               double drop_tol = 1e-9);

// -- field builders --------------------------------------------------------

VectorFieldSpec constant_field(const Vec& v);
VectorFieldSpec coordinate_field(int dim, int index);
/// X^k = a_k + sum_i B(k,i) x_i
VectorFieldSpec affine_field(const Vec& a, const Mat& B);
VectorFieldSpec random_affine_field(int dim, Rng& rng);  // coefficients in [-1,1]
/// Symbolic product (phi X)^k = sum_j phi^k_j X^j.
VectorFieldSpec endo_apply_field(const EndomorphismField& phi,
                                 const VectorFieldSpec& X);

/// Symmetry (1e-12) and nondegeneracy (1e-10) of the metric at one point;
/// throws GeometryError naming the manifold on failure.
void validate_metric_at(const ManifoldSpec& M, const Vec& p);

}  // namespace golden
