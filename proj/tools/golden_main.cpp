// Command line front end: classification, map checking, identity
// verification and catalog listing over the built-in or a configured
// workspace.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "golden/report.hpp"
#include "golden/verify.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::uint64_t seed = golden::kDefaultSeed;
  int points = 0;
  double tol = 0.0;
  std::string format = "text";
  bool seed_set = false;
  bool points_set = false;
  bool tol_set = false;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--config", opts.config_path,
                  "workspace configuration file (JSON)");
  sub->add_option("--seed", opts.seed, "sampling seed")
      ->each([&opts](const std::string&) { opts.seed_set = true; });
  sub->add_option("--points", opts.points, "sample points per check")
      ->check(CLI::PositiveNumber)
      ->each([&opts](const std::string&) { opts.points_set = true; });
  sub->add_option("--tol", opts.tol, "override tolerance")
      ->check(CLI::PositiveNumber)
      ->each([&opts](const std::string&) { opts.tol_set = true; });
  sub->add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
}

golden::WorkspaceConfig load(const CommonOpts& opts) {
  golden::WorkspaceConfig ws = opts.config_path.empty()
                                   ? golden::default_workspace()
                                   : golden::load_workspace(opts.config_path);
  if (opts.seed_set) ws.sampling.seed = opts.seed;
  if (opts.points_set) ws.sampling.points = opts.points;
  return ws;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sampled calculus of almost product and golden structures"};
  app.require_subcommand(1);

  CommonOpts opts;

  std::string classify_target;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify one catalog structure");
  CLI::Option* classify_pos =
      classify_cmd->add_option("structure", classify_target, "structure name");
  classify_cmd
      ->add_option("--catalog", classify_target,
                   "structure name (alternative to the positional)")
      ->excludes(classify_pos);
  add_common(classify_cmd, opts);

  std::string map_target;
  CLI::App* check_map_cmd = app.add_subcommand(
      "check-map", "intertwining, tension and harmonicity of one map");
  CLI::Option* check_map_pos =
      check_map_cmd->add_option("map", map_target, "map name");
  check_map_cmd
      ->add_option("--catalog", map_target,
                   "map name (alternative to the positional)")
      ->excludes(check_map_pos);
  add_common(check_map_cmd, opts);

  std::vector<std::string> suites;
  std::vector<std::string> entries;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the identity verification suites");
  verify_cmd->add_option("--suite", suites, "restrict to named suites");
  verify_cmd->add_option("--catalog", entries,
                         "restrict to named catalog entries or manifolds");
  add_common(verify_cmd, opts);

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "inspect the workspace catalog");
  CLI::App* catalog_list_cmd =
      catalog_cmd->add_subcommand("list", "list manifolds, structures, maps");
  catalog_cmd->require_subcommand(1);
  add_common(catalog_list_cmd, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (golden::structure_constant_self_check() > 1e-15) {
      std::cerr << "golden constant self check failed\n";
      return 2;
    }
    golden::WorkspaceConfig ws = load(opts);
    const bool json = opts.format == "json";

    if (catalog_list_cmd->parsed()) {
      std::cout << (json ? golden::render_catalog_json(ws.catalog)
                         : golden::render_catalog_text(ws.catalog));
      return 0;
    }

    if (classify_cmd->parsed()) {
      if (classify_target.empty()) {
        std::cerr << "config error: classify needs a structure name\n";
        return 2;
      }
      double tol = opts.tol_set ? opts.tol : ws.tolerances.flag;
      golden::ClassificationReport rep =
          golden::run_classify(ws, classify_target, ws.sampling, tol);
      std::cout << (json ? golden::render_classify_json(rep, ws.sampling)
                         : golden::render_classify_text(rep));
      for (const auto& f : rep.flags)
        if (!f.evaluable) return 1;
      return 0;
    }

    if (check_map_cmd->parsed()) {
      if (map_target.empty()) {
        std::cerr << "config error: check-map needs a map name\n";
        return 2;
      }
      double tol = opts.tol_set ? opts.tol : ws.tolerances.cross_check;
      golden::MapCheckReport rep =
          golden::run_check_map(ws, map_target, ws.sampling, tol);
      std::cout << (json ? golden::render_check_map_json(rep, ws.sampling)
                         : golden::render_check_map_text(rep));
      if (rep.relations_available &&
          (rep.constancy.fired || rep.cls.conflict))
        return 1;
      return 0;
    }

    // verify
    golden::VerifyOptions vopt;
    vopt.plan = ws.sampling;
    vopt.tol_override = opts.tol_set ? opts.tol : 0.0;
    vopt.suites = suites;
    vopt.entries = entries;
    std::vector<golden::SuiteResult> results = golden::run_verify(ws, vopt);
    std::cout << (json ? golden::render_verify_json(results, ws.sampling)
                       : golden::render_verify_text(results, ws.sampling));
    return golden::all_pass(results) ? 0 : 1;
  } catch (const golden::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
