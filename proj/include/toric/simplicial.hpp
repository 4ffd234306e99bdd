#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/types.hpp"

namespace toric {

/// A finite collection of subsets of {0, ..., vertex_count - 1}. Not
/// required to be closed under taking subsets. The void collection (no
/// faces) and the empty complex {∅} are different objects.
class FaceSet {
 public:
  FaceSet() = default;
  /// Sorts and deduplicates; throws ModelError on out-of-range faces.
  FaceSet(int vertex_count, std::vector<VertexSet> faces);

  /// Downward closure of `generators`, including ∅ whenever any generator
  /// is given.
  static FaceSet closure(int vertex_count, std::span<const VertexSet> generators);
  /// All subsets of the vertex set.
  static FaceSet simplex(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  const std::vector<VertexSet>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool is_void() const { return faces_.empty(); }
  bool contains(VertexSet face) const;
  bool is_subset_closed() const;
  /// Largest face cardinality, or -1 for the void collection.
  int max_face_size() const;

  bool operator==(const FaceSet&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<VertexSet> faces_;  // ascending numeric order
};

/// Reduced homology dimensions over Q, indexed by degree j >= -1.
class HomologyDims {
 public:
  HomologyDims() = default;
  /// dims[k] is the dimension in degree k - 1.
  explicit HomologyDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

  std::size_t operator[](int degree) const {
    const int k = degree + 1;
    return (k < 0 || k >= static_cast<int>(dims_.size())) ? 0 : dims_[static_cast<std::size_t>(k)];
  }
  /// Highest degree reported (max face size - 1).
  int top_degree() const { return static_cast<int>(dims_.size()) - 2; }
  bool all_zero() const;
  std::size_t total() const;

  bool operator==(const HomologyDims&) const = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Δ|_σ, re-indexed onto |σ| vertices in ascending order.
FaceSet restrict(const FaceSet& complex, VertexSet sigma);

/// link_Δ(σ) = {τ : τ ∪ σ ∈ Δ, τ ∩ σ = ∅}, re-indexed onto the complement
/// of σ in ascending order. Void if σ itself is not a face.
FaceSet link(const FaceSet& complex, VertexSet sigma);

/// Δ* = {σ ⊆ V : V \ σ ∉ Δ} on the same vertex set.
FaceSet alexander_dual(const FaceSet& complex);

/// Reduced homology of the chain complex spanned by the faces, with a face of
/// k elements in degree k - 1 and boundary
///   ∂ e_τ = Σ_{i ∈ τ} (-1)^(s-1) e_{τ \ {i}},   i the s-th element of τ,
/// projected onto the faces present. Ranks are exact. Throws InternalError
/// if the projected boundary does not square to zero.
HomologyDims reduced_homology(const FaceSet& faces);

/// Number of faces of each cardinality (index = cardinality).
std::vector<std::size_t> face_counts(const FaceSet& faces);

}  // namespace toric
