#pragma once

#include <string>
#include <vector>

#include "golden/classifier.hpp"
#include "golden/config.hpp"
#include "golden/maps.hpp"

namespace golden {

/// One verification suite: a family of sampled identity or coherence checks
/// with a single max-residual verdict. Boolean suites (flag agreement,
/// expected classifications) report residual 0 or 1 against tolerance 0.5.
struct SuiteResult {
  std::string name;
  std::string scope;  // catalog entries the suite covered
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool evaluable = true;  // false when filters left nothing to check
  std::string detail;
};

struct VerifyOptions {
  SamplePlan plan;
  double tol_override = 0.0;         // > 0 replaces non-boolean suite tolerances
  std::vector<std::string> suites;   // empty = all
  std::vector<std::string> entries;  // catalog filter by entry or manifold name
};

/// Names of all registered suites, in report order.
std::vector<std::string> suite_names();

/// Run the requested suites over the workspace catalog. Results are ordered
/// by suite name; each (suite, entry) pair draws from its own seeded stream,
/// so filtering does not change the residuals of what remains.
std::vector<SuiteResult> run_verify(const WorkspaceConfig& ws,
                                    const VerifyOptions& opt);

bool all_pass(const std::vector<SuiteResult>& results);

/// Classification of one named catalog structure.
ClassificationReport run_classify(const WorkspaceConfig& ws,
                                  const std::string& structure_name,
                                  const SamplePlan& plan, double tol);

/// Everything the check-map command reports for one named map.
struct MapCheckReport {
  std::string map;
  std::string source;
  std::string target;
  bool relations_available = false;
  IntertwiningClass cls;
  ConstancyDiagnostic constancy;
  HarmonicityHypotheses hypotheses;
  HarmonicityReport harmonicity;
  TensionResult sample_tension;
  std::string structure_note;
};

MapCheckReport run_check_map(const WorkspaceConfig& ws,
                             const std::string& map_name,
                             const SamplePlan& plan, double tol);

}  // namespace golden
