#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/counting.hpp"
#include "toric/model.hpp"
#include "toric/simplicial.hpp"
#include "toric/srscan.hpp"

namespace toric {

/// Downward closure of the maximal cones (∅ included). Throws ModelError
/// without fan data.
FaceSet fan_complex(const ToricVarietyModel& model);

/// Independent route through the fan complex:
///   h^i(X; O(α)) = Σ_{σ ⊆ [n]} |(α,σ)| · dim H̃_{d-i-1}(Σ|_{[n] \ σ}).
/// Restriction homology is α-independent and computed once for all 2^n
/// subsets at construction, so a subset with no homology is never counted.
class FanOracle {
 public:
  static constexpr int kMaxCoordinates = 20;

  explicit FanOracle(const ToricVarietyModel& model);

  /// h^0 .. h^d. Throws NonFiniteCohomology if an infinite neg-group meets
  /// nonzero homology.
  std::vector<BigInt> cohomology(const DivisorClass& alpha) const;
  const FaceSet& complex() const { return complex_; }

 private:
  ToricVarietyModel model_;
  FaceSet complex_;
  NegGroupCounter counter_;
  /// σ (the neg set) -> i -> multiplicity, nonzero entries only
  std::map<VertexSet, std::map<int, std::size_t>> weights_;
};

std::vector<BigInt> cohomology_via_fan(const ToricVarietyModel& model, const DivisorClass& alpha);

struct HochsterReport {
  std::size_t degrees_checked = 0;
  std::size_t vanishing_checked = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares the Γ-complex multiplicity factors on every degree of P(I)
/// with dim H̃^{|σ|-r-1}(Σ|_σ), and checks that restriction homology vanishes
/// for degrees outside P(I) (all of them for n <= 16, a fixed-seed sample of
/// `samples` otherwise).
HochsterReport hochster_check(const ToricVarietyModel& model, const DegreeSet& degrees, std::size_t samples = 4096);
HochsterReport hochster_check(const ToricVarietyModel& model);

}  // namespace toric
