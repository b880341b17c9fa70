#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golden/operators.hpp"
#include "golden/structures.hpp"

namespace golden {

/// Precondition violations on map operations (missing intertwining,
/// frame construction failures, dimension mismatches).
struct MapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A smooth map between two catalog charts, componentwise in source
/// coordinates. source/target hold catalog manifold names for reporting;
/// the ManifoldSpecs themselves are passed to the operations.
struct SmoothMapSpec {
  std::string name;
  std::string source;
  std::string target;
  std::vector<ExpressionAst> components;  // F^gamma
};

/// Pointwise second-order data of the map.
struct MapJet {
  Vec value;              // F(p)
  Mat jac;                // jac(gamma, i) = d_i F^gamma
  std::vector<Mat> hess;  // hess[gamma](i,j) = d_i d_j F^gamma
};

MapJet map_jet_at(const SmoothMapSpec& F, const Vec& p);
Vec pushforward_at(const SmoothMapSpec& F, const Vec& X, const Vec& p);

/// Geometry of both sides at one source point: source Levi-Civita data,
/// target Christoffel symbols at F(p), and the contracted bilinear forms
/// second[gamma](i,j) of the second fundamental form.
struct MapContext {
  MapJet jet;
  PointGeometry source_geom;
  Christoffel target_gamma;
  std::vector<Mat> second;
};

MapContext map_context_at(const ManifoldSpec& M, const ManifoldSpec& N,
                          const SmoothMapSpec& F, const Vec& p);

/// (nabla F_*)(X,Y)^gamma = X^i Y^j [ d_i d_j F^gamma
///   - Gamma^M{}^k_ij d_k F^gamma
///   + Gamma^N{}^gamma_ab d_i F^a d_j F^b ].
Vec second_fundamental_core(const MapContext& ctx, const Vec& X, const Vec& Y);
Vec second_fundamental_form_at(const ManifoldSpec& M, const ManifoldSpec& N,
                               const SmoothMapSpec& F, const Vec& X,
                               const Vec& Y, const Vec& p);

// -- intertwining ----------------------------------------------------------

struct RelationResidual {
  std::string name;
  double residual = 0.0;
  bool holds = false;
  bool cross = false;  // a relation that forces the map to be constant
};

struct IntertwiningClass {
  std::vector<RelationResidual> relations;
  int lambda = 0;         // +1 direct, -1 anti, 0 none
  bool conflict = false;  // direct and anti both below tol with nonzero jacobian
  double max_jacobian = 0.0;
  double tol = 1e-8;

  const RelationResidual* find(const std::string& name) const;
};

/// Residuals of F_* x_M = y_N F_* over the sample, for the four twin-pair
/// relations (product/product direct and anti, golden/golden direct and
/// anti) and the eight mixed product-golden relations, each of which forces
/// constancy. P_M and P_N must be product structures; the golden sides are
/// their twins.
IntertwiningClass intertwining_class(const ManifoldSpec& M,
                                     const ManifoldSpec& N,
                                     const SmoothMapSpec& F,
                                     const StructureField& P_M,
                                     const StructureField& P_N,
                                     const std::vector<Vec>& points,
                                     double tol = 1e-8);

struct ConstancyDiagnostic {
  bool fired = false;
  double max_jacobian = 0.0;
  std::vector<std::string> holding_cross_relations;
  std::string message;
};

/// A mixed relation can only hold on a constant map; if one holds while the
/// jacobian is nonzero somewhere, the tolerance is too loose or the fixture
/// is wrong.
ConstancyDiagnostic constancy_diagnostic(const IntertwiningClass& cls,
                                         double jacobian_tol = 1e-9);

// -- tension ---------------------------------------------------------------

struct TensionResult {
  Vec point;
  Vec tension;
  double tension_norm = 0.0;
  bool split_available = false;
  Vec d_tension_plus;
  Vec d_tension_minus;
  double plus_norm = 0.0;
  double minus_norm = 0.0;
  std::string split_note;
};

/// Tension = sum of signs_i (nabla F_*)(e_i, e_i) over an orthonormal
/// source frame. The eigendistribution split tries orthonormal frames of
/// pi_k(TM) first (indefinite Gram-Schmidt over projected coordinate
/// vectors); when the restricted metric is degenerate, as it always is in
/// the hyperbolic case, and the map intertwines with sign lambda, the split
/// falls back to applying the target eigenprojectors to the total tension,
/// which is the decomposition the harmonicity equivalence argument uses.
/// S_M or S_N may be null; the split is then reported unavailable unless
/// the frames work out.
TensionResult tension_at(const ManifoldSpec& M, const ManifoldSpec& N,
                         const SmoothMapSpec& F, const Vec& p,
                         const StructureField* S_M = nullptr,
                         const StructureField* S_N = nullptr, int lambda = 0);

// -- commutation of the second fundamental form with the structures --------

/// Residual of
///   (nabla F_*)(PX, PY) = (nabla F_*)(X,Y) + (nabla^N_{QX'}Q)Y'
///                         - (nabla^N_{Y'}Q)(QX')
///                         - F_*[(nabla^M_{PX}P)Y - (nabla^M_Y P)(PX)]
/// together with its diagonal specialization through the S operators,
///   (nabla F_*)(PX, PX) = (nabla F_*)(X,X)
///                         + Q{S_Q(X',X') - lambda F_*(S_P(X,X))}.
/// Max-abs of both, for an intertwining map (lambda = +1 or -1).
double second_form_commutation_residual_at(const ManifoldSpec& M,
                                           const ManifoldSpec& N,
                                           const SmoothMapSpec& F,
                                           const StructureField& P_M,
                                           const StructureField& P_N,
                                           int lambda, const Vec& X,
                                           const Vec& Y, const Vec& p);

/// Frame {e_1..e_m} on a hyperbolic chart such that {e_i, Pe_i} is a full
/// orthonormal frame with h(e_i,e_i) = 1 and h(Pe_i,Pe_i) = -1. Built from
/// dual bases of the two null eigendistributions. Throws MapError when the
/// pairing degenerates or the structure is not balanced.
std::vector<Vec> adapted_hyperbolic_frame_at(const ManifoldSpec& M,
                                             const StructureField& P,
                                             const Vec& p);

/// Residual of the closed form of the tension of an intertwining map from a
/// hyperbolic chart,
///   T(F) = -Q { sum_i h_ii S_Q(e_i', e_i') - lambda F_*(div P) },
/// evaluated over the adapted frame above, e_i' = F_* e_i.
double tension_structure_residual_at(const ManifoldSpec& M,
                                     const ManifoldSpec& N,
                                     const SmoothMapSpec& F,
                                     const StructureField& P_M,
                                     const StructureField& P_N, int lambda,
                                     const Vec& p);

// -- harmonicity -----------------------------------------------------------

/// Externally verified hypotheses feeding the harmonicity equivalence:
/// vanishing div P on the source and Vidal eigendistributions on the
/// target. Computed by the classifier; passed in to keep this module free
/// of classification logic.
struct HarmonicityHypotheses {
  bool source_semi_decomposable = false;
  bool target_vidal_plus = false;
  bool target_vidal_minus = false;
};

struct HarmonicityReport {
  double max_tension_norm = 0.0;
  double max_plus_norm = 0.0;
  double max_minus_norm = 0.0;
  bool harmonic = false;
  bool plus_harmonic = false;
  bool minus_harmonic = false;
  bool split_everywhere = false;
  bool equivalence_applicable = false;
  bool equivalence_holds = false;
  double tol = 1e-8;
  std::string note;
};

HarmonicityReport harmonicity_report(const ManifoldSpec& M,
                                     const ManifoldSpec& N,
                                     const SmoothMapSpec& F,
                                     const StructureField* S_M,
                                     const StructureField* S_N, int lambda,
                                     const HarmonicityHypotheses& hyp,
                                     const std::vector<Vec>& points,
                                     double tol = 1e-8);

}  // namespace golden
