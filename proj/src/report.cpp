#include "golden/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace golden {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double r) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << r;
  return os.str();
}

std::string fmt_vec(const Vec& v) {
  std::string out = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt(v(i));
  }
  return out + ")";
}

ordered_json json_vec(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

std::string kind_name(StructureKind k) {
  return k == StructureKind::Product ? "product" : "golden";
}

std::string pad(const std::string& s, std::size_t width) {
  std::string out = s;
  while (out.size() < width) out += ' ';
  return out;
}

}  // namespace

std::string render_verify_text(const std::vector<SuiteResult>& results,
                               const SamplePlan& plan) {
  std::ostringstream os;
  os << "verify: seed " << plan.seed << ", points " << plan.points
     << ", fields per point " << plan.fields_per_point << "\n";
  int passed = 0;
  for (const auto& r : results) {
    os << "  " << pad(r.name, 26) << " max " << fmt(r.max_residual) << "  tol "
       << fmt(r.tolerance) << "  " << (r.pass ? "PASS" : "FAIL");
    if (!r.evaluable) os << " (nothing in scope)";
    os << "\n";
    if (!r.pass) {
      os << "    scope: " << r.scope << "\n";
      os << "    detail: " << r.detail << "\n";
    }
    if (r.pass) ++passed;
  }
  if (passed == static_cast<int>(results.size()))
    os << "all suites pass (" << passed << "/" << results.size() << ")\n";
  else
    os << "FAIL: " << results.size() - passed << " of " << results.size()
       << " suites failed\n";
  return os.str();
}

std::string render_verify_json(const std::vector<SuiteResult>& results,
                               const SamplePlan& plan) {
  ordered_json doc;
  doc["command"] = "verify";
  doc["seed"] = plan.seed;
  doc["points"] = plan.points;
  doc["fields-per-point"] = plan.fields_per_point;
  ordered_json suites = ordered_json::array();
  for (const auto& r : results) {
    ordered_json s;
    s["name"] = r.name;
    s["scope"] = r.scope;
    s["max-residual"] = r.max_residual;
    s["tolerance"] = r.tolerance;
    s["pass"] = r.pass;
    s["evaluable"] = r.evaluable;
    s["detail"] = r.detail;
    suites.push_back(std::move(s));
  }
  doc["suites"] = std::move(suites);
  doc["all-pass"] = all_pass(results);
  return doc.dump(2) + "\n";
}

std::string render_classify_text(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "classify " << rep.structure << " on " << rep.manifold << " ("
     << kind_name(rep.kind) << " structure, tol " << fmt(rep.tol) << ")\n";
  if (!rep.header.empty()) os << "note: " << rep.header << "\n";
  for (const auto& f : rep.flags) {
    os << "  " << pad(f.name, 22);
    if (!f.evaluable)
      os << "n/a  ";
    else
      os << (f.verdict ? "yes  " : "no   ");
    os << "residual " << fmt(f.residual);
    if (!f.note.empty()) os << "  [" << f.note << "]";
    os << "\n";
  }
  std::vector<std::string> bad = coherence_violations(rep);
  if (bad.empty()) {
    os << "coherence: ok\n";
  } else {
    os << "coherence violations:\n";
    for (const auto& b : bad) os << "  " << b << "\n";
  }
  return os.str();
}

std::string render_classify_json(const ClassificationReport& rep,
                                 const SamplePlan& plan) {
  ordered_json doc;
  doc["command"] = "classify";
  doc["structure"] = rep.structure;
  doc["manifold"] = rep.manifold;
  doc["kind"] = kind_name(rep.kind);
  doc["seed"] = plan.seed;
  doc["points"] = plan.points;
  doc["fields-per-point"] = plan.fields_per_point;
  doc["tolerance"] = rep.tol;
  doc["note"] = rep.header;
  ordered_json flags = ordered_json::array();
  for (const auto& f : rep.flags) {
    ordered_json j;
    j["name"] = f.name;
    j["verdict"] = f.verdict;
    j["residual"] = f.residual;
    j["evaluable"] = f.evaluable;
    j["definition"] = f.definition;
    j["note"] = f.note;
    flags.push_back(std::move(j));
  }
  doc["flags"] = std::move(flags);
  doc["coherence-violations"] = coherence_violations(rep);
  return doc.dump(2) + "\n";
}

std::string render_check_map_text(const MapCheckReport& rep) {
  std::ostringstream os;
  os << "check-map " << rep.map << ": " << rep.source << " -> " << rep.target
     << "\n";
  os << "structures: " << rep.structure_note << "\n";
  if (rep.relations_available) {
    os << "intertwining (tol " << fmt(rep.cls.tol) << "):\n";
    for (const auto& r : rep.cls.relations) {
      os << "  " << pad(r.name, 17) << (r.holds ? "holds " : "fails ")
         << "residual " << fmt(r.residual);
      if (r.cross) os << "  [forces a constant map when it holds]";
      os << "\n";
    }
    os << "lambda: ";
    if (rep.cls.lambda > 0)
      os << "+1 (structure preserving)";
    else if (rep.cls.lambda < 0)
      os << "-1 (structure reversing)";
    else
      os << "none";
    if (rep.cls.conflict) os << "  CONFLICT";
    os << "\n";
    os << "max differential norm: " << fmt(rep.cls.max_jacobian) << "\n";
    if (rep.constancy.fired)
      os << "constancy diagnostic: " << rep.constancy.message << "\n";
    else
      os << "constancy diagnostic: silent\n";
    os << "hypotheses: source semi-decomposable "
       << (rep.hypotheses.source_semi_decomposable ? "yes" : "no")
       << ", target Vidal plus "
       << (rep.hypotheses.target_vidal_plus ? "yes" : "no") << ", minus "
       << (rep.hypotheses.target_vidal_minus ? "yes" : "no") << "\n";
  }
  const HarmonicityReport& h = rep.harmonicity;
  os << "tension: max norm " << fmt(h.max_tension_norm) << " -> "
     << (h.harmonic ? "harmonic" : "not harmonic") << "\n";
  if (h.split_everywhere)
    os << "eigendistribution parts: plus max " << fmt(h.max_plus_norm) << " ("
       << (h.plus_harmonic ? "harmonic" : "not harmonic") << "), minus max "
       << fmt(h.max_minus_norm) << " ("
       << (h.minus_harmonic ? "harmonic" : "not harmonic") << ")\n";
  if (h.equivalence_applicable)
    os << "harmonicity equivalence: "
       << (h.equivalence_holds ? "holds" : "FAILS") << "\n";
  else
    os << "harmonicity equivalence: hypotheses not met\n";
  if (!h.note.empty()) os << "note: " << h.note << "\n";
  const TensionResult& t = rep.sample_tension;
  os << "sample point " << fmt_vec(t.point) << ": tension "
     << fmt_vec(t.tension) << ", norm " << fmt(t.tension_norm) << "\n";
  if (t.split_available)
    os << "  plus part " << fmt_vec(t.d_tension_plus) << ", minus part "
       << fmt_vec(t.d_tension_minus) << "\n";
  else if (!t.split_note.empty())
    os << "  split: " << t.split_note << "\n";
  return os.str();
}

std::string render_check_map_json(const MapCheckReport& rep,
                                  const SamplePlan& plan) {
  ordered_json doc;
  doc["command"] = "check-map";
  doc["map"] = rep.map;
  doc["source"] = rep.source;
  doc["target"] = rep.target;
  doc["seed"] = plan.seed;
  doc["points"] = plan.points;
  doc["relations-available"] = rep.relations_available;
  if (rep.relations_available) {
    ordered_json rels = ordered_json::array();
    for (const auto& r : rep.cls.relations) {
      ordered_json j;
      j["name"] = r.name;
      j["residual"] = r.residual;
      j["holds"] = r.holds;
      j["cross"] = r.cross;
      rels.push_back(std::move(j));
    }
    doc["relations"] = std::move(rels);
    doc["lambda"] = rep.cls.lambda;
    doc["conflict"] = rep.cls.conflict;
    doc["max-jacobian"] = rep.cls.max_jacobian;
    doc["tolerance"] = rep.cls.tol;
    ordered_json cons;
    cons["fired"] = rep.constancy.fired;
    cons["max-jacobian"] = rep.constancy.max_jacobian;
    cons["holding-cross-relations"] = rep.constancy.holding_cross_relations;
    cons["message"] = rep.constancy.message;
    doc["constancy"] = std::move(cons);
    ordered_json hyp;
    hyp["source-semi-decomposable"] = rep.hypotheses.source_semi_decomposable;
    hyp["target-vidal-plus"] = rep.hypotheses.target_vidal_plus;
    hyp["target-vidal-minus"] = rep.hypotheses.target_vidal_minus;
    doc["hypotheses"] = std::move(hyp);
  }
  const HarmonicityReport& h = rep.harmonicity;
  ordered_json harm;
  harm["max-tension-norm"] = h.max_tension_norm;
  harm["max-plus-norm"] = h.max_plus_norm;
  harm["max-minus-norm"] = h.max_minus_norm;
  harm["harmonic"] = h.harmonic;
  harm["plus-harmonic"] = h.plus_harmonic;
  harm["minus-harmonic"] = h.minus_harmonic;
  harm["split-everywhere"] = h.split_everywhere;
  harm["equivalence-applicable"] = h.equivalence_applicable;
  harm["equivalence-holds"] = h.equivalence_holds;
  harm["tolerance"] = h.tol;
  harm["note"] = h.note;
  doc["harmonicity"] = std::move(harm);
  const TensionResult& t = rep.sample_tension;
  ordered_json st;
  st["point"] = json_vec(t.point);
  st["tension"] = json_vec(t.tension);
  st["norm"] = t.tension_norm;
  st["split-available"] = t.split_available;
  if (t.split_available) {
    st["plus"] = json_vec(t.d_tension_plus);
    st["minus"] = json_vec(t.d_tension_minus);
  }
  st["note"] = t.split_note;
  doc["sample-tension"] = std::move(st);
  doc["structure-note"] = rep.structure_note;
  return doc.dump(2) + "\n";
}

std::string render_catalog_text(const Catalog& cat) {
  std::ostringstream os;
  os << "manifolds:\n";
  for (const auto& m : cat.manifolds) {
    os << "  " << pad(m.name, 12) << "dim " << m.dim << ", coordinates ";
    for (std::size_t i = 0; i < m.coordinate_names.size(); ++i) {
      if (i) os << ",";
      os << m.coordinate_names[i];
    }
    os << ", box ";
    for (std::size_t i = 0; i < m.sample_box.size(); ++i) {
      if (i) os << " x ";
      os << "[" << m.sample_box[i].lo << "," << m.sample_box[i].hi << "]";
    }
    os << "\n";
  }
  os << "structures:\n";
  for (const auto& s : cat.structures)
    os << "  " << pad(s.name, 12) << kind_name(s.field.kind) << " on "
       << pad(s.manifold, 9) << s.summary << "\n";
  os << "maps:\n";
  for (const auto& m : cat.maps)
    os << "  " << pad(m.spec.name, 14) << m.spec.source << " -> "
       << pad(m.spec.target, 9) << m.summary << "\n";
  return os.str();
}

std::string render_catalog_json(const Catalog& cat) {
  ordered_json doc;
  doc["command"] = "catalog";
  ordered_json mans = ordered_json::array();
  for (const auto& m : cat.manifolds) {
    ordered_json j;
    j["name"] = m.name;
    j["dim"] = m.dim;
    j["coordinates"] = m.coordinate_names;
    ordered_json box = ordered_json::array();
    for (const auto& iv : m.sample_box)
      box.push_back(ordered_json::array({iv.lo, iv.hi}));
    j["sample-box"] = std::move(box);
    mans.push_back(std::move(j));
  }
  doc["manifolds"] = std::move(mans);
  ordered_json structures = ordered_json::array();
  for (const auto& s : cat.structures) {
    ordered_json j;
    j["name"] = s.name;
    j["manifold"] = s.manifold;
    j["kind"] = kind_name(s.field.kind);
    j["summary"] = s.summary;
    structures.push_back(std::move(j));
  }
  doc["structures"] = std::move(structures);
  ordered_json maps = ordered_json::array();
  for (const auto& m : cat.maps) {
    ordered_json j;
    j["name"] = m.spec.name;
    j["source"] = m.spec.source;
    j["target"] = m.spec.target;
    j["summary"] = m.summary;
    maps.push_back(std::move(j));
  }
  doc["maps"] = std::move(maps);
  return doc.dump(2) + "\n";
}

}  // namespace golden
