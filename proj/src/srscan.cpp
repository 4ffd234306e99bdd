#include "toric/srscan.hpp"

#include <algorithm>
#include <string>

namespace toric {

std::size_t DegreeSet::DegreeClass::face_count() const {
  std::size_t total = 0;
  for (const auto& bucket : faces_by_size) total += bucket.size();
  return total;
}

std::vector<VertexSet> DegreeSet::degrees() const {
  std::vector<VertexSet> out;
  out.reserve(entries_.size());
  for (const auto& [deg, cls] : entries_) out.push_back(deg);
  return out;
}

namespace {

class PowersetScan {
 public:
  explicit PowersetScan(const std::vector<VertexSet>& gens) : gens_(gens), suffix_(gens.size() + 1, 0) {
    for (std::size_t k = gens.size(); k-- > 0;) suffix_[k] = suffix_[k + 1] | gens[k];
  }

  std::map<VertexSet, DegreeSet::DegreeClass> run() {
    visit(0, 0, 0);
    return std::move(entries_);
  }

 private:
  void record(VertexSet degree, VertexSet tau) {
    auto& buckets = entries_[degree].faces_by_size;
    const auto size = static_cast<std::size_t>(set_size(tau));
    if (buckets.size() <= size) buckets.resize(size + 1);
    buckets[size].push_back(tau);
  }

  void visit(VertexSet tau, VertexSet uni, std::size_t next) {
    record(uni, tau);
    const std::size_t t = gens_.size();
    if (next == t) return;
    if (tau != 0 && is_subset(suffix_[next], uni)) {
      const VertexSet rest = full_set(static_cast<int>(t)) & ~full_set(static_cast<int>(next));
      for (VertexSet sub = rest; sub != 0; sub = (sub - 1) & rest) record(uni, tau | sub);
      return;
    }
    for (std::size_t j = next; j < t; ++j) visit(tau | (VertexSet{1} << j), uni | gens_[j], j + 1);
  }

  const std::vector<VertexSet>& gens_;
  std::vector<VertexSet> suffix_;
  std::map<VertexSet, DegreeSet::DegreeClass> entries_;
};

}  // namespace

DegreeSet scan_powerset(std::span<const VertexSet> sr_generators, int vertex_count, ScanOptions options) {
  std::vector<VertexSet> gens(sr_generators.begin(), sr_generators.end());
  sort_canonical(gens);
  const int t = static_cast<int>(gens.size());
  if (t > options.generator_cap || t > kMaxVertices) {
    throw ResourceLimitError("resource limit exceeded: " + std::to_string(t) +
                             " Stanley-Reisner generators exceed the cap of " +
                             std::to_string(options.generator_cap));
  }
  auto entries = PowersetScan(gens).run();
  for (auto& [deg, cls] : entries) {
    for (auto& bucket : cls.faces_by_size) std::sort(bucket.begin(), bucket.end());
  }
  return DegreeSet(vertex_count, std::move(gens), std::move(entries));
}

FaceSet gamma_complex(const DegreeSet& degrees, VertexSet degree) {
  auto it = degrees.entries().find(degree);
  if (it == degrees.entries().end()) {
    throw ModelError("degree " + degree_bitstring(degree, degrees.vertex_count()) + " is not in P(I)");
  }
  std::vector<VertexSet> faces;
  for (const auto& bucket : it->second.faces_by_size) faces.insert(faces.end(), bucket.begin(), bucket.end());
  return FaceSet(degrees.generator_count(), std::move(faces));
}

std::vector<VertexSet> contributing_degrees(const DegreeSet& degrees, int vertex_count) {
  const VertexSet all = full_set(vertex_count);
  std::vector<VertexSet> out;
  for (const auto& [deg, cls] : degrees.entries()) {
    if (degrees.contains(all & ~deg)) out.push_back(deg);
  }
  return out;
}

}  // namespace toric
