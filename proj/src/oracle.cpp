#include "toric/oracle.hpp"

#include <random>

#include "toric/multiplicity.hpp"

namespace toric {

FaceSet fan_complex(const ToricVarietyModel& model) {
  if (!model.max_cones()) throw ModelError("fan data (max_cones) required");
  return FaceSet::closure(model.n(), *model.max_cones());
}

FanOracle::FanOracle(const ToricVarietyModel& model)
    : model_(model), complex_(fan_complex(model)), counter_(model) {
  const int n = model.n();
  const int d = model.d();
  if (n > kMaxCoordinates) {
    throw ResourceLimitError("fan oracle scans 2^n subsets; n = " + std::to_string(n) + " is too large");
  }
  const VertexSet all = full_set(n);
  for (VertexSet sigma = 0; sigma <= all; ++sigma) {
    const HomologyDims h = reduced_homology(restrict(complex_, all & ~sigma));
    std::map<int, std::size_t> w;
    for (int i = 0; i <= d; ++i) {
      if (const std::size_t m = h[d - i - 1]; m != 0) w.emplace(i, m);
    }
    if (!w.empty()) weights_.emplace(sigma, std::move(w));
  }
}

std::vector<BigInt> FanOracle::cohomology(const DivisorClass& alpha) const {
  model_.check_class(alpha);
  std::vector<BigInt> h(static_cast<std::size_t>(model_.d() + 1), BigInt(0));
  for (const auto& [sigma, w] : weights_) {
    const CountResult c = counter_.count(NegGroupQuery{alpha, sigma});
    if (c.is_infinite()) throw NonFiniteCohomology();
    if (c.value() == 0) continue;
    for (const auto& [i, m] : w) h[static_cast<std::size_t>(i)] += c.value() * static_cast<unsigned long>(m);
  }
  return h;
}

std::vector<BigInt> cohomology_via_fan(const ToricVarietyModel& model, const DivisorClass& alpha) {
  return FanOracle(model).cohomology(alpha);
}

HochsterReport hochster_check(const ToricVarietyModel& model, const DegreeSet& degrees, std::size_t samples) {
  const FaceSet fan = fan_complex(model);
  const int n = model.n();
  HochsterReport report;

  auto restriction_betti = [&](VertexSet sigma) {
    // β_{r,σ} = dim H̃^{|σ|-r-1}(Σ|_σ); over Q cohomology and homology agree
    const HomologyDims h = reduced_homology(restrict(fan, sigma));
    FactorMap betti;
    const int size = set_size(sigma);
    for (int r = 0; r <= size; ++r) {
      if (const std::size_t b = h[size - r - 1]; b != 0) betti.emplace(r, b);
    }
    return betti;
  };
  auto describe = [](const FactorMap& f) {
    std::string s = "{";
    for (const auto& [r, b] : f) s += " " + std::to_string(r) + ":" + std::to_string(b);
    return s + " }";
  };

  for (VertexSet deg : degrees.degrees()) {
    const FactorMap gamma_side = multiplicity_factors(degrees, deg);
    const FactorMap fan_side = restriction_betti(deg);
    ++report.degrees_checked;
    if (gamma_side != fan_side) {
      report.mismatches.push_back("degree " + degree_bitstring(deg, n) + ": Gamma " + describe(gamma_side) +
                                  " vs Hochster " + describe(fan_side));
    }
  }

  auto check_vanishing = [&](VertexSet sigma) {
    if (degrees.contains(sigma)) return;
    ++report.vanishing_checked;
    if (const FactorMap betti = restriction_betti(sigma); !betti.empty()) {
      report.mismatches.push_back("degree " + degree_bitstring(sigma, n) + " outside P(I) has Betti numbers " +
                                  describe(betti));
    }
  };
  const VertexSet all = full_set(n);
  if (n <= 16) {
    for (VertexSet sigma = 0; sigma <= all; ++sigma) check_vanishing(sigma);
  } else {
    std::mt19937_64 rng(0x5eedULL);
    for (std::size_t k = 0; k < samples; ++k) check_vanishing(rng() & all);
  }
  return report;
}

HochsterReport hochster_check(const ToricVarietyModel& model) {
  return hochster_check(model, scan_powerset(model.sr_generators(), model.n()));
}

}  // namespace toric
