#pragma once

#include <map>
#include <span>

#include "toric/srscan.hpp"

namespace toric {

/// Sparse r -> β_{r,σ}(S/I); zero entries are never stored.
using FactorMap = std::map<int, std::size_t>;

/// Graded Betti numbers β_{r,σ}(S/I) = dim H̃_{r-1}(Γ^σ) for one degree of P.
FactorMap multiplicity_factors(const DegreeSet& degrees, VertexSet degree);

/// Factor maps for a list of degrees. Degrees whose factors all vanish are
/// kept with an empty map.
class MultiplicityTable {
 public:
  MultiplicityTable() = default;
  explicit MultiplicityTable(std::map<VertexSet, FactorMap> table) : table_(std::move(table)) {}

  const std::map<VertexSet, FactorMap>& entries() const { return table_; }
  bool contains(VertexSet degree) const { return table_.count(degree) != 0; }
  const FactorMap& at(VertexSet degree) const { return table_.at(degree); }
  std::size_t size() const { return table_.size(); }

 private:
  std::map<VertexSet, FactorMap> table_;
};

/// Evaluates the degrees concurrently when `threads` > 1.
MultiplicityTable multiplicity_table(const DegreeSet& degrees, std::span<const VertexSet> contributing,
                                     unsigned threads = 1);

}  // namespace toric
