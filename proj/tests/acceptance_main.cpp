// Acceptance gate. Thirteen checks define done for this repository; each
// prints exactly one verdict line. The heavy lifting lives in the library's
// verification suites, run here at full sampling depth.

#include <cstdio>
#include <string>
#include <vector>

#include "golden/report.hpp"
#include "golden/verify.hpp"

using namespace golden;

namespace {

int failures = 0;

void criterion(int number, const char* label, bool ok) {
  std::printf("%s criterion %2d: %s\n", ok ? "[ OK ]" : "[FAIL]", number,
              label);
  if (!ok) ++failures;
}

const SuiteResult* find_suite(const std::vector<SuiteResult>& rs,
                              const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return &r;
  return nullptr;
}

bool suite_ok(const std::vector<SuiteResult>& rs, const std::string& name) {
  const SuiteResult* s = find_suite(rs, name);
  if (s == nullptr || !s->pass || !s->evaluable) {
    if (s != nullptr)
      std::printf("       %s: max residual %.3e, tol %.3e\n       %s\n",
                  name.c_str(), s->max_residual, s->tolerance,
                  s->detail.c_str());
    else
      std::printf("       suite %s missing\n", name.c_str());
    return false;
  }
  return true;
}

bool scope_has(const std::vector<SuiteResult>& rs, const std::string& name,
               const std::string& entry) {
  const SuiteResult* s = find_suite(rs, name);
  return s != nullptr && s->scope.find(entry) != std::string::npos;
}

}  // namespace

int main() {
  WorkspaceConfig ws = default_workspace();
  VerifyOptions opt;
  opt.plan = ws.sampling;  // seed 0x5EED, 100 points, 20 fields per point

  std::printf("running %zu verification suites at full depth...\n",
              suite_names().size());
  std::vector<SuiteResult> rs = run_verify(ws, opt);

  criterion(1, "exponential graph map: classes, tension values, not harmonic",
            suite_ok(rs, "map-exp-reproduction"));

  criterion(2, "twin transform exact on the flat pair, involutive, commutes",
            suite_ok(rs, "twin-algebra") && suite_ok(rs, "twin-projectors"));

  criterion(3, "twin scaling laws for Nijenhuis tensors and derivatives",
            suite_ok(rs, "twin-ratio-nijenhuis") &&
                suite_ok(rs, "twin-ratio-derivative"));

  criterion(4, "bracket and connection Nijenhuis forms agree, group value",
            suite_ok(rs, "nijenhuis-cross") &&
                suite_ok(rs, "nijenhuis-heisen4-value"));

  criterion(5, "fundamental form derivative identity on hyperbolic entries",
            suite_ok(rs, "form-derivative-identity") &&
                scope_has(rs, "form-derivative-identity", "hyper2-P") &&
                scope_has(rs, "form-derivative-identity", "heisen4-P"));

  criterion(6, "symmetrized derivative matches its covariant form, both kinds",
            suite_ok(rs, "psi-derivative-identity") &&
                scope_has(rs, "psi-derivative-identity", "euclid2-G") &&
                suite_ok(rs, "tachibana-pure-form"));

  criterion(7, "S operator identities on the warped plane, both kinds",
            suite_ok(rs, "s-operator-product") &&
                suite_ok(rs, "s-operator-golden") &&
                scope_has(rs, "s-operator-product", "warped2-P") &&
                scope_has(rs, "s-operator-golden", "warped2-G") &&
                suite_ok(rs, "s-vanishing-equivalence"));

  criterion(8, "compatibility flags agree across conjugates and twins",
            suite_ok(rs, "compat-family"));

  criterion(9, "classifier verdicts coherent and as hand checked",
            suite_ok(rs, "classifier-coherence") &&
                suite_ok(rs, "constancy-screen"));

  criterion(10, "second fundamental form commutation for intertwining maps",
            suite_ok(rs, "second-form-commutation") &&
                scope_has(rs, "second-form-commutation", "exp-euclid2") &&
                scope_has(rs, "second-form-commutation", "id-hyper2") &&
                scope_has(rs, "second-form-commutation", "id-heisen4") &&
                suite_ok(rs, "parallel-commutation"));

  criterion(11, "tension splits along eigendistributions, equivalence holds",
            suite_ok(rs, "tension-split") &&
                suite_ok(rs, "map-harmonic-fixtures") &&
                suite_ok(rs, "tension-structure-formula"));

  criterion(12, "signatures and null eigendistributions of the metrics",
            suite_ok(rs, "signature-rank") &&
                suite_ok(rs, "hyperbolic-identities") &&
                suite_ok(rs, "psi-parallel-vanishing"));

  // Criterion 13: identical configuration and seed must give byte-identical
  // machine reports. Two fresh runs, rendered and compared as strings.
  {
    WorkspaceConfig w2 = default_workspace();
    w2.sampling.points = 30;
    VerifyOptions o2;
    o2.plan = w2.sampling;
    std::string a = render_verify_json(run_verify(w2, o2), w2.sampling);
    std::string b = render_verify_json(run_verify(w2, o2), w2.sampling);
    std::string c = render_classify_json(
        run_classify(w2, "heisen4-P", w2.sampling, w2.tolerances.flag),
        w2.sampling);
    std::string d = render_classify_json(
        run_classify(w2, "heisen4-P", w2.sampling, w2.tolerances.flag),
        w2.sampling);
    criterion(13, "machine reports byte identical across repeated runs",
              !a.empty() && a == b && !c.empty() && c == d);
  }

  if (failures == 0) {
    std::printf("acceptance: 13 of 13 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d of 13 criteria FAILED\n", failures);
  return 1;
}
