#pragma once

#include <string>
#include <vector>

#include "golden/maps.hpp"
#include "golden/structures.hpp"

namespace golden {

/// A named structure field attached to a catalog chart. Names follow the
/// pattern "<manifold>-P" / "<manifold>-G"; the golden entries are built as
/// twins of the product entries, so a twin pair always shares its
/// eigendistributions.
struct CatalogStructure {
  std::string name;
  std::string manifold;
  StructureField field;
  std::string summary;
};

struct CatalogMap {
  SmoothMapSpec spec;
  std::string summary;
};

struct Catalog {
  std::vector<ManifoldSpec> manifolds;
  std::vector<CatalogStructure> structures;
  std::vector<CatalogMap> maps;

  const ManifoldSpec* manifold(const std::string& name) const;
  const CatalogStructure* structure(const std::string& name) const;
  const CatalogMap* map(const std::string& name) const;
};

/// Built-in charts, structure fields and maps. The set is small but spans
/// the interesting combinations: definite and neutral metrics, parallel and
/// non-parallel structures, and maps that do or do not intertwine.
Catalog builtin_catalog();

/// Load-time validation shared by the built-in catalog and configuration
/// files: structural shape, metric symmetry and nondegeneracy at sampled
/// points, structure polynomial residuals, and evaluability of every map on
/// its sample box. Throws GeometryError or MapError naming the entry.
void validate_catalog(const Catalog& cat, int sample_points = 8);

}  // namespace golden
