#pragma once

#include <string>
#include <vector>

#include "golden/operators.hpp"
#include "golden/structures.hpp"

namespace golden {

struct FlagEntry {
  std::string name;
  double residual = 0.0;
  bool verdict = false;
  bool evaluable = true;
  std::string definition;  // the tensor condition the residual measures
  std::string note;
};

struct ClassificationReport {
  std::string manifold;
  std::string structure;  // catalog label, filled by the caller
  StructureKind kind = StructureKind::Product;
  double tol = 1e-8;
  std::string header;
  std::vector<FlagEntry> flags;

  const FlagEntry* find(const std::string& name) const;
};

struct ClassifyOptions {
  double tol = 1e-8;
  int fields_per_point = 20;
  std::uint64_t seed = kDefaultSeed;
};

/// Residual of one eigendistribution property. `definite` reports whether
/// the restricted metric was definite (minimal rather than just critical
/// terminology); `evaluable` goes false when no orthonormal frame of the
/// distribution exists, which is the normal state of affairs for null
/// eigendistributions under a hyperbolic metric.
struct DistributionCheck {
  double residual = 0.0;
  bool evaluable = true;
  bool definite = false;
  std::string note;
};

/// sup over samples and random test vectors v in the eigendistribution of
/// the complement part of nabla_v X, where X is the section obtained by
/// projecting a constant extension of v. That quantity only depends on v,
/// so constant extensions lose nothing.
DistributionCheck vidal_check(const ManifoldSpec& M, const StructureField& S,
                              int eigen_sign, const std::vector<Vec>& points,
                              Rng& rng, int fields_per_point);

/// sup over samples of the complement part of sum_i signs_i nabla_{v_i} v_i
/// over an orthonormal frame {v_i} of the eigendistribution.
DistributionCheck critical_check(const ManifoldSpec& M, const StructureField& S,
                                 int eigen_sign,
                                 const std::vector<Vec>& points);

/// Sampling-based classification: every flag holds a sup-residual over the
/// sample (basis vectors stand in for quantified sections wherever the
/// defining expression is tensorial) and a threshold verdict. Golden
/// structures route the 2-form flags and the S-operator flag through their
/// twin product structure, which is what their Kaehler conditions refer to.
ClassificationReport classify(const ManifoldSpec& M, const StructureField& S,
                              const std::vector<Vec>& points,
                              const ClassifyOptions& opt = {});

/// Threshold-level implication checks between flags of one report:
/// parallel forces integrable, the exchange condition and a vanishing S
/// operator; a vanishing S operator forces vanishing divergence on
/// hyperbolic entries; integrable plus exchange forces vanishing
/// divergence. Returns human-readable descriptions of violations.
std::vector<std::string> coherence_violations(const ClassificationReport& r);

}  // namespace golden
