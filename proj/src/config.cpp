#include "golden/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace golden {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

std::string idx(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

const json& member(const json& j, const std::string& path,
                   const std::string& key) {
  if (!j.contains(key)) fail(path, "missing required field '" + key + "'");
  return j.at(key);
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int as_positive_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  long long v = j.get<long long>();
  if (v <= 0 || v > 1000000) fail(path, "expected a positive integer");
  return static_cast<int>(v);
}

ExpressionAst parse_entry(const json& j, const std::string& path,
                          const std::vector<std::string>& coords) {
  std::string src = as_string(j, path);
  try {
    return parse_expression(src, coords);
  } catch (const ParseError& e) {
    fail(path, std::string("parse error: ") + e.what());
  }
}

std::vector<std::vector<ExpressionAst>> parse_square_matrix(
    const json& j, const std::string& path,
    const std::vector<std::string>& coords, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    fail(path, "expected " + std::to_string(dim) + " rows");
  std::vector<std::vector<ExpressionAst>> out(dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j.at(r);
    std::string rpath = idx(path, r);
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail(rpath, "expected " + std::to_string(dim) + " entries");
    out[r].reserve(dim);
    for (int c = 0; c < dim; ++c)
      out[r].push_back(parse_entry(row.at(c), idx(rpath, c), coords));
  }
  return out;
}

ManifoldSpec parse_manifold(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  ManifoldSpec M;
  M.name = as_string(member(j, path, "name"), path + ".name");
  if (M.name.empty()) fail(path + ".name", "must not be empty");
  M.dim = as_positive_int(member(j, path, "dim"), path + ".dim");

  const json& coords = member(j, path, "coordinate-names");
  if (!coords.is_array() || static_cast<int>(coords.size()) != M.dim)
    fail(path + ".coordinate-names",
         "expected " + std::to_string(M.dim) + " names");
  for (std::size_t i = 0; i < coords.size(); ++i)
    M.coordinate_names.push_back(
        as_string(coords.at(i), idx(path + ".coordinate-names", i)));

  const json& box = member(j, path, "sample-box");
  if (!box.is_array() || static_cast<int>(box.size()) != M.dim)
    fail(path + ".sample-box",
         "expected " + std::to_string(M.dim) + " intervals");
  for (std::size_t i = 0; i < box.size(); ++i) {
    const json& iv = box.at(i);
    std::string ipath = idx(path + ".sample-box", i);
    if (!iv.is_array() || iv.size() != 2) fail(ipath, "expected [lo, hi]");
    Interval out;
    out.lo = as_number(iv.at(0), ipath + "[0]");
    out.hi = as_number(iv.at(1), ipath + "[1]");
    if (!(out.lo < out.hi)) fail(ipath, "interval must satisfy lo < hi");
    M.sample_box.push_back(out);
  }

  M.metric = parse_square_matrix(member(j, path, "metric"), path + ".metric",
                                 M.coordinate_names, M.dim);
  // Symmetry as written, before any numerics: the mirror entry must be the
  // same expression tree. Commuted spellings like x1*x2 vs x2*x1 are
  // rejected on purpose; write the matrix symmetrically.
  for (int r = 0; r < M.dim; ++r)
    for (int c = r + 1; c < M.dim; ++c)
      if (!M.metric[r][c].structurally_equal(M.metric[c][r]))
        fail(idx(idx(path + ".metric", r), c),
             "metric entry differs from its mirror entry as written");
  return M;
}

CatalogStructure parse_structure(const json& j, const std::string& path,
                                 const Catalog& cat) {
  if (!j.is_object()) fail(path, "expected an object");
  CatalogStructure S;
  S.name = as_string(member(j, path, "name"), path + ".name");
  S.manifold = as_string(member(j, path, "manifold"), path + ".manifold");
  const ManifoldSpec* M = cat.manifold(S.manifold);
  if (M == nullptr)
    fail(path + ".manifold", "unknown manifold '" + S.manifold + "'");

  std::string kind = as_string(member(j, path, "kind"), path + ".kind");
  if (kind == "product")
    S.field.kind = StructureKind::Product;
  else if (kind == "golden")
    S.field.kind = StructureKind::Golden;
  else
    fail(path + ".kind", "expected \"product\" or \"golden\"");

  S.field.endo.components =
      parse_square_matrix(member(j, path, "components"), path + ".components",
                          M->coordinate_names, M->dim);
  if (j.contains("summary"))
    S.summary = as_string(j.at("summary"), path + ".summary");
  return S;
}

CatalogMap parse_map(const json& j, const std::string& path,
                     const Catalog& cat) {
  if (!j.is_object()) fail(path, "expected an object");
  CatalogMap F;
  F.spec.name = as_string(member(j, path, "name"), path + ".name");
  F.spec.source = as_string(member(j, path, "source"), path + ".source");
  F.spec.target = as_string(member(j, path, "target"), path + ".target");
  const ManifoldSpec* src = cat.manifold(F.spec.source);
  const ManifoldSpec* tgt = cat.manifold(F.spec.target);
  if (src == nullptr)
    fail(path + ".source", "unknown manifold '" + F.spec.source + "'");
  if (tgt == nullptr)
    fail(path + ".target", "unknown manifold '" + F.spec.target + "'");

  const json& comp = member(j, path, "components");
  if (!comp.is_array() || static_cast<int>(comp.size()) != tgt->dim)
    fail(path + ".components",
         "expected " + std::to_string(tgt->dim) + " target components");
  for (std::size_t i = 0; i < comp.size(); ++i)
    F.spec.components.push_back(parse_entry(
        comp.at(i), idx(path + ".components", i), src->coordinate_names));
  if (j.contains("summary"))
    F.summary = as_string(j.at("summary"), path + ".summary");
  return F;
}

void check_unique_names(const Catalog& cat) {
  for (std::size_t i = 0; i < cat.manifolds.size(); ++i)
    for (std::size_t k = i + 1; k < cat.manifolds.size(); ++k)
      if (cat.manifolds[i].name == cat.manifolds[k].name)
        fail(idx("manifolds", k), "duplicate name '" + cat.manifolds[k].name + "'");
  for (std::size_t i = 0; i < cat.structures.size(); ++i)
    for (std::size_t k = i + 1; k < cat.structures.size(); ++k)
      if (cat.structures[i].name == cat.structures[k].name)
        fail(idx("structures", k), "duplicate name '" + cat.structures[k].name + "'");
  for (std::size_t i = 0; i < cat.maps.size(); ++i)
    for (std::size_t k = i + 1; k < cat.maps.size(); ++k)
      if (cat.maps[i].spec.name == cat.maps[k].spec.name)
        fail(idx("maps", k), "duplicate name '" + cat.maps[k].spec.name + "'");
}

}  // namespace

WorkspaceConfig default_workspace() {
  WorkspaceConfig ws;
  ws.catalog = builtin_catalog();
  return ws;
}

WorkspaceConfig parse_workspace(const std::string& text,
                                const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(origin + ": expected a JSON object");

  WorkspaceConfig ws;

  if (doc.contains("sampling")) {
    const json& s = doc.at("sampling");
    if (!s.is_object()) fail("sampling", "expected an object");
    if (s.contains("seed")) {
      const json& seed = s.at("seed");
      if (!seed.is_number_unsigned() && !seed.is_number_integer())
        fail("sampling.seed", "expected an unsigned integer");
      ws.sampling.seed = seed.get<std::uint64_t>();
    }
    if (s.contains("points-per-check"))
      ws.sampling.points =
          as_positive_int(s.at("points-per-check"), "sampling.points-per-check");
    if (s.contains("fields-per-point"))
      ws.sampling.fields_per_point =
          as_positive_int(s.at("fields-per-point"), "sampling.fields-per-point");
  }

  if (doc.contains("tolerances")) {
    const json& t = doc.at("tolerances");
    if (!t.is_object()) fail("tolerances", "expected an object");
    if (t.contains("flag")) {
      ws.tolerances.flag = as_number(t.at("flag"), "tolerances.flag");
      if (ws.tolerances.flag <= 0) fail("tolerances.flag", "must be positive");
    }
    if (t.contains("cross-check")) {
      ws.tolerances.cross_check =
          as_number(t.at("cross-check"), "tolerances.cross-check");
      if (ws.tolerances.cross_check <= 0)
        fail("tolerances.cross-check", "must be positive");
    }
  }

  const json& manifolds = member(doc, origin, "manifolds");
  if (!manifolds.is_array() || manifolds.empty())
    fail("manifolds", "expected a non-empty array");
  for (std::size_t i = 0; i < manifolds.size(); ++i)
    ws.catalog.manifolds.push_back(
        parse_manifold(manifolds.at(i), idx("manifolds", i)));

  if (doc.contains("structures")) {
    const json& structures = doc.at("structures");
    if (!structures.is_array()) fail("structures", "expected an array");
    for (std::size_t i = 0; i < structures.size(); ++i)
      ws.catalog.structures.push_back(
          parse_structure(structures.at(i), idx("structures", i), ws.catalog));
  }

  if (doc.contains("maps")) {
    const json& maps = doc.at("maps");
    if (!maps.is_array()) fail("maps", "expected an array");
    for (std::size_t i = 0; i < maps.size(); ++i)
      ws.catalog.maps.push_back(
          parse_map(maps.at(i), idx("maps", i), ws.catalog));
  }

  check_unique_names(ws.catalog);

  // Numeric validation after all structural checks passed.
  try {
    validate_catalog(ws.catalog);
  } catch (const std::exception& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  return ws;
}

WorkspaceConfig load_workspace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str(), path);
}

}  // namespace golden
