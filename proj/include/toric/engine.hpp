#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/counting.hpp"
#include "toric/model.hpp"
#include "toric/multiplicity.hpp"
#include "toric/srscan.hpp"

namespace toric {

enum class Summation {
  /// Degrees σ with both σ and its complement in P(I).
  kFiltered,
  /// Every degree of P(I); debug route for checking the complement filter.
  kUnfiltered,
};

struct EngineOptions {
  Summation summation = Summation::kFiltered;
  int generator_cap = kDefaultGeneratorCap;
  /// Worker threads for batch queries; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// One degree's share of h^•(X; O(α)).
struct BreakdownEntry {
  VertexSet degree = 0;
  int support_size = 0;
  CountResult count = CountResult::finite(0);
  FactorMap factors;
  /// i -> |(α,σ)| · β_{|σ|-i,σ}
  std::map<int, BigInt> contributions;
};

struct CohomologyResult {
  DivisorClass alpha;
  /// h^0 .. h^d
  std::vector<BigInt> dims;
  std::vector<BreakdownEntry> breakdown;
};

struct BatchEntry {
  DivisorClass alpha;
  std::optional<CohomologyResult> result;
  std::string error;
  /// Distinguishes non-finite cohomology from other failures.
  bool non_finite = false;
};

/// Line bundle cohomology h^i(X; O(α)) = Σ_σ |(α,σ)| · β_{|σ|-i,σ}(S/I),
/// summed over degrees σ of P(I) whose complement also lies in P(I).
///
/// P(I) and the multiplicity table depend only on the model and are built
/// once at construction. The complement filter is only valid when every
/// degree it drops carries zero Betti numbers (true for complete fans); the
/// engine checks that once and otherwise sums over all of P(I).
class CohomologyEngine {
 public:
  explicit CohomologyEngine(ToricVarietyModel model, EngineOptions options = {});

  const ToricVarietyModel& model() const { return model_; }
  const EngineOptions& options() const { return options_; }
  const DegreeSet& degrees() const { return degrees_; }
  /// Factors for every degree the sum runs over.
  const MultiplicityTable& table() const { return table_; }
  const std::vector<VertexSet>& summed_degrees() const { return summed_; }
  /// False when a degree dropped by the complement filter has a nonzero factor.
  bool filter_sound() const { return filter_sound_; }
  const NegGroupCounter& counter() const { return counter_; }

  /// Throws NonFiniteCohomology or ModelError (wrong class length).
  CohomologyResult cohomology(const DivisorClass& alpha) const;
  /// Element-wise cohomology in input order, parallel over α. Failures are
  /// collected per element.
  std::vector<BatchEntry> cohomology_all(std::span<const DivisorClass> alphas) const;

 private:
  ToricVarietyModel model_;
  EngineOptions options_;
  DegreeSet degrees_;
  std::vector<VertexSet> summed_;
  MultiplicityTable table_;
  bool filter_sound_ = true;
  NegGroupCounter counter_;
};

struct SerreReport {
  bool pass = false;
  std::string report;
};

/// Compares h^i(α) with h^{d-i}(K - α).
SerreReport serre_check(const CohomologyEngine& engine, const DivisorClass& alpha);

/// Inclusive integer box, lexicographic order.
std::vector<DivisorClass> class_box(std::span<const std::pair<std::int64_t, std::int64_t>> ranges);

}  // namespace toric
