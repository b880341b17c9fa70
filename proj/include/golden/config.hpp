#pragma once

#include <stdexcept>
#include <string>

#include "golden/catalog.hpp"
#include "golden/sampling.hpp"

namespace golden {

/// Schema violations in workspace files. Messages carry the JSON path of the
/// offending field, e.g. "manifolds[1].metric[0][2]: ...". Mapped to exit
/// code 2 by the command line tool.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToleranceSet {
  double flag = 1e-8;        // classification thresholds
  double cross_check = 1e-8; // intertwining / identity thresholds
};

struct WorkspaceConfig {
  Catalog catalog;
  SamplePlan sampling;
  ToleranceSet tolerances;
};

/// Built-in catalog with the default sampling plan.
WorkspaceConfig default_workspace();

/// Parse and validate a JSON workspace document. Structural checks (types,
/// shapes, name resolution, symmetry of the metric as written) run before
/// any numerics; numeric validation reuses validate_catalog and is reported
/// as a ConfigError naming the entry. The exact field names are documented
/// in docs/config_schema.md.
WorkspaceConfig parse_workspace(const std::string& text,
                                const std::string& origin);
WorkspaceConfig load_workspace(const std::string& path);

}  // namespace golden
