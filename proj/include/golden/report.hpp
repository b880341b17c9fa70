#pragma once

#include <string>
#include <vector>

#include "golden/verify.hpp"

namespace golden {

/// Renderers for the command line reports. Text goes to humans; the JSON
/// forms are stable, fully ordered, and byte-identical for identical inputs
/// so they can be diffed or archived.

std::string render_verify_text(const std::vector<SuiteResult>& results,
                               const SamplePlan& plan);
std::string render_verify_json(const std::vector<SuiteResult>& results,
                               const SamplePlan& plan);

std::string render_classify_text(const ClassificationReport& rep);
std::string render_classify_json(const ClassificationReport& rep,
                                 const SamplePlan& plan);

std::string render_check_map_text(const MapCheckReport& rep);
std::string render_check_map_json(const MapCheckReport& rep,
                                  const SamplePlan& plan);

std::string render_catalog_text(const Catalog& cat);
std::string render_catalog_json(const Catalog& cat);

}  // namespace golden
