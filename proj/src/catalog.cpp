#include "golden/catalog.hpp"

#include <sstream>

namespace golden {

namespace {

std::vector<std::vector<ExpressionAst>> parse_matrix(
    const std::vector<std::vector<std::string>>& entries,
    const std::vector<std::string>& coords) {
  std::vector<std::vector<ExpressionAst>> out;
  out.reserve(entries.size());
  for (const auto& row : entries) {
    std::vector<ExpressionAst> parsed;
    parsed.reserve(row.size());
    for (const auto& s : row) parsed.push_back(parse_expression(s, coords));
    out.push_back(std::move(parsed));
  }
  return out;
}

std::vector<ExpressionAst> parse_row(const std::vector<std::string>& entries,
                                     const std::vector<std::string>& coords) {
  std::vector<ExpressionAst> out;
  out.reserve(entries.size());
  for (const auto& s : entries) out.push_back(parse_expression(s, coords));
  return out;
}

ManifoldSpec make_manifold(std::string name, std::vector<std::string> coords,
                           std::vector<Interval> box,
                           const std::vector<std::vector<std::string>>& h) {
  ManifoldSpec M;
  M.name = std::move(name);
  M.dim = static_cast<int>(coords.size());
  M.coordinate_names = std::move(coords);
  M.sample_box = std::move(box);
  M.metric = parse_matrix(h, M.coordinate_names);
  return M;
}

StructureField make_product(const ManifoldSpec& M,
                            const std::vector<std::vector<std::string>>& comp) {
  StructureField S;
  S.kind = StructureKind::Product;
  S.endo.components = parse_matrix(comp, M.coordinate_names);
  return S;
}

void add_pair(Catalog& cat, const ManifoldSpec& M, const StructureField& P,
              const std::string& p_summary, const std::string& g_summary) {
  cat.structures.push_back({M.name + "-P", M.name, P, p_summary});
  cat.structures.push_back({M.name + "-G", M.name, twin_of(P), g_summary});
}

void add_map(Catalog& cat, std::string name, const ManifoldSpec& src,
             const ManifoldSpec& tgt, const std::vector<std::string>& comp,
             std::string summary) {
  SmoothMapSpec F;
  F.name = std::move(name);
  F.source = src.name;
  F.target = tgt.name;
  F.components = parse_row(comp, src.coordinate_names);
  cat.maps.push_back({std::move(F), std::move(summary)});
}

}  // namespace

const ManifoldSpec* Catalog::manifold(const std::string& name) const {
  for (const auto& m : manifolds)
    if (m.name == name) return &m;
  return nullptr;
}

const CatalogStructure* Catalog::structure(const std::string& name) const {
  for (const auto& s : structures)
    if (s.name == name) return &s;
  return nullptr;
}

const CatalogMap* Catalog::map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.spec.name == name) return &m;
  return nullptr;
}

Catalog builtin_catalog() {
  Catalog cat;

  // Flat plane, euclidean metric. The diagonal product structure is
  // parallel and integrable; everything that can vanish vanishes here.
  ManifoldSpec euclid2 = make_manifold(
      "euclid2", {"x1", "x2"}, {{-1, 1}, {-1, 1}}, {{"1", "0"}, {"0", "1"}});

  // Flat plane with the neutral off-diagonal metric. The same diagonal
  // structure is hyperbolic for this metric: both eigendistributions are
  // null lines.
  ManifoldSpec hyper2 = make_manifold(
      "hyper2", {"x1", "x2"}, {{-1, 1}, {-1, 1}}, {{"0", "1"}, {"1", "0"}});

  // Warped product plane. The structure stays pure for the metric but is
  // no longer parallel, so the derivative operators all turn on.
  ManifoldSpec warped2 =
      make_manifold("warped2", {"x1", "x2"}, {{-0.5, 0.5}, {-1, 1}},
                    {{"1", "0"}, {"0", "exp(2*x1)"}});

  // Four dimensional nilpotent-flavoured chart. The metric pairs the two
  // eigendistributions of the structure and is null on each, giving a
  // neutral signature (2,2); the structure is hyperbolic, non-parallel and
  // non-integrable.
  ManifoldSpec heisen4 =
      make_manifold("heisen4", {"x1", "x2", "x3", "x4"},
                    {{-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}},
                    {{"0", "-x1", "1", "0"},
                     {"-x1", "0", "0", "1"},
                     {"1", "0", "0", "0"},
                     {"0", "1", "0", "0"}});

  StructureField p_euclid2 =
      make_product(euclid2, {{"1", "0"}, {"0", "-1"}});
  StructureField p_hyper2 = make_product(hyper2, {{"1", "0"}, {"0", "-1"}});
  StructureField p_warped2 = make_product(warped2, {{"1", "0"}, {"0", "-1"}});
  StructureField p_heisen4 = make_product(heisen4, {{"1", "0", "0", "0"},
                                                    {"0", "1", "0", "0"},
                                                    {"0", "2*x1", "-1", "0"},
                                                    {"0", "0", "0", "-1"}});

  cat.manifolds = {euclid2, hyper2, warped2, heisen4};

  add_pair(cat, euclid2, p_euclid2,
           "diagonal reflection, pure and parallel for the flat metric",
           "constant golden matrix diag(sigma, sigbar), twin of euclid2-P");
  add_pair(cat, hyper2, p_hyper2,
           "diagonal reflection, hyperbolic for the neutral metric",
           "twin of hyper2-P, hyperbolic and parallel");
  add_pair(cat, warped2, p_warped2,
           "diagonal reflection, pure but not parallel under the warp",
           "twin of warped2-P, pure with non-vanishing derivative operators");
  add_pair(cat, heisen4, p_heisen4,
           "shear-coupled reflection, hyperbolic, neither parallel nor "
           "integrable",
           "twin of heisen4-P on the neutral four dimensional chart");

  add_map(cat, "exp-euclid2", euclid2, euclid2, {"x1", "exp(x2)"},
          "(s,t) -> (s, exp(t)); intertwines both structures yet is not "
          "harmonic");
  add_map(cat, "id-euclid2", euclid2, euclid2, {"x1", "x2"},
          "identity chart map, harmonic");
  add_map(cat, "id-hyper2", hyper2, hyper2, {"x1", "x2"},
          "identity chart map on the neutral plane, harmonic");
  add_map(cat, "id-warped2", warped2, warped2, {"x1", "x2"},
          "identity chart map on the warped plane, harmonic");
  add_map(cat, "id-heisen4", heisen4, heisen4, {"x1", "x2", "x3", "x4"},
          "identity chart map on the four dimensional chart, harmonic");
  add_map(cat, "swap-hyper2", hyper2, hyper2, {"x2", "x1"},
          "coordinate swap, an isometry that reverses the structure sign");
  add_map(cat, "const-euclid2", euclid2, euclid2, {"0", "0"},
          "constant map to the origin; every mixed relation holds trivially");

  validate_catalog(cat);
  return cat;
}

void validate_catalog(const Catalog& cat, int count) {
  for (const auto& M : cat.manifolds) {
    if (M.dim <= 0)
      throw GeometryError("manifold " + M.name + ": dimension must be positive");
    if (static_cast<int>(M.coordinate_names.size()) != M.dim ||
        static_cast<int>(M.sample_box.size()) != M.dim ||
        static_cast<int>(M.metric.size()) != M.dim)
      throw GeometryError("manifold " + M.name + ": inconsistent shapes");
    for (const auto& row : M.metric)
      if (static_cast<int>(row.size()) != M.dim)
        throw GeometryError("manifold " + M.name + ": metric is not square");
    for (const auto& iv : M.sample_box)
      if (!(iv.lo < iv.hi))
        throw GeometryError("manifold " + M.name + ": empty sample interval");

    Rng rng(mix_seed(kDefaultSeed, "validate:" + M.name));
    for (const Vec& p : sample_points(M.sample_box, count, rng))
      validate_metric_at(M, p);
  }

  for (const auto& S : cat.structures) {
    const ManifoldSpec* M = cat.manifold(S.manifold);
    if (M == nullptr)
      throw GeometryError("structure " + S.name + ": unknown manifold " +
                          S.manifold);
    if (S.field.dim() != M->dim)
      throw GeometryError("structure " + S.name + ": dimension mismatch");
    Rng rng(mix_seed(kDefaultSeed, "validate:" + S.name));
    for (const Vec& p : sample_points(M->sample_box, count, rng)) {
      double r = polynomial_residual_at(S.field, p);
      if (r > 1e-8) {
        std::ostringstream os;
        os << "structure " << S.name
           << ": defining polynomial residual " << r << " at sampled point";
        throw GeometryError(os.str());
      }
    }
  }

  for (const auto& F : cat.maps) {
    const ManifoldSpec* src = cat.manifold(F.spec.source);
    const ManifoldSpec* tgt = cat.manifold(F.spec.target);
    if (src == nullptr || tgt == nullptr)
      throw MapError("map " + F.spec.name + ": unknown source or target chart");
    if (static_cast<int>(F.spec.components.size()) != tgt->dim)
      throw MapError("map " + F.spec.name +
                     ": component count differs from target dimension");
    Rng rng(mix_seed(kDefaultSeed, "validate:" + F.spec.name));
    for (const Vec& p : sample_points(src->sample_box, count, rng)) {
      try {
        map_jet_at(F.spec, p);  // surfaces domain errors in the expressions
      } catch (const EvalError& e) {
        throw MapError("map " + F.spec.name +
                       ": not evaluable on the sample box: " + e.what());
      }
    }
  }
}

}  // namespace golden
