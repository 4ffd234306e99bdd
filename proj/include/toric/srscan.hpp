#pragma once

#include <map>
#include <span>
#include <vector>

#include "toric/simplicial.hpp"
#include "toric/types.hpp"

namespace toric {

inline constexpr int kDefaultGeneratorCap = 28;

struct ScanOptions {
  int generator_cap = kDefaultGeneratorCap;
};

/// P(I): every squarefree degree that is a union (lcm) of Stanley-Reisner
/// generator supports, together with all generator subsets τ producing it.
class DegreeSet {
 public:
  /// Generator subsets sharing one union degree, bucketed by |τ|.
  struct DegreeClass {
    std::vector<std::vector<VertexSet>> faces_by_size;

    std::size_t face_count() const;
  };

  DegreeSet(int vertex_count, std::vector<VertexSet> generators, std::map<VertexSet, DegreeClass> entries)
      : vertex_count_(vertex_count), generators_(std::move(generators)), entries_(std::move(entries)) {}

  int vertex_count() const { return vertex_count_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  /// Generators in the order used for the τ bitmasks (canonical order).
  const std::vector<VertexSet>& generators() const { return generators_; }
  const std::map<VertexSet, DegreeClass>& entries() const { return entries_; }
  bool contains(VertexSet degree) const { return entries_.count(degree) != 0; }
  std::vector<VertexSet> degrees() const;

 private:
  int vertex_count_;
  std::vector<VertexSet> generators_;
  std::map<VertexSet, DegreeClass> entries_;
};

/// Visits every τ ⊆ [t] once by increasing-index DFS, recording τ under the
/// union of its generator supports. When the remaining generators all lie in
/// the running union, the whole subtree lands in one class and is recorded
/// without recomputing unions. Throws ResourceLimitError if t exceeds the cap.
DegreeSet scan_powerset(std::span<const VertexSet> sr_generators, int vertex_count,
                        ScanOptions options = {});

/// Γ for one degree: the generator subsets with union exactly `degree`, as a
/// (generally not subset-closed) face collection on [t].
FaceSet gamma_complex(const DegreeSet& degrees, VertexSet degree);

/// Degrees σ of P whose complement [n] \ σ also lies in P.
std::vector<VertexSet> contributing_degrees(const DegreeSet& degrees, int vertex_count);

}  // namespace toric
