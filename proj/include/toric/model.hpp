#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/types.hpp"

namespace toric {

/// Input datum of a simplicial projective toric variety: homogeneous
/// coordinates, their GLSM charges, the Stanley-Reisner generators and
/// (optionally) the maximal cones of the fan.
///
/// Charges are stored one row per coordinate: row i is the class [D_i] of
/// the coordinate divisor {x_i = 0}. Vertex subsets are bitmasks over the
/// 0-based coordinate indices; generator and cone lists are kept in
/// canonical (lexicographic) order. Immutable once constructed.
class ToricVarietyModel {
 public:
  /// Validates everything and throws ModelError on violation. If only cones
  /// are given, the SR generators are derived from them; if both are given
  /// they must agree.
  ToricVarietyModel(std::vector<std::string> coordinate_names, int dimension,
                    std::vector<std::vector<std::int64_t>> charges,
                    std::optional<std::vector<VertexSet>> sr_generators,
                    std::optional<std::vector<VertexSet>> max_cones);

  const std::vector<std::string>& coordinate_names() const { return names_; }
  int n() const { return static_cast<int>(names_.size()); }
  int d() const { return dimension_; }
  /// n - d, the rank of Cl(X).
  int class_rank() const { return n() - d(); }
  const std::vector<std::vector<std::int64_t>>& charges() const { return charges_; }
  std::span<const std::int64_t> charge(int coordinate) const {
    return charges_[static_cast<std::size_t>(coordinate)];
  }
  const std::vector<VertexSet>& sr_generators() const { return sr_; }
  std::size_t generator_count() const { return sr_.size(); }
  const std::optional<std::vector<VertexSet>>& max_cones() const { return cones_; }
  bool has_fan() const { return cones_.has_value(); }

  /// Throws ModelError if alpha has the wrong number of components.
  void check_class(const DivisorClass& alpha) const;

 private:
  std::vector<std::string> names_;
  int dimension_;
  std::vector<std::vector<std::int64_t>> charges_;
  std::vector<VertexSet> sr_;
  std::optional<std::vector<VertexSet>> cones_;
};

/// Parses the JSON variety document:
///   { "coordinates": [...], "dimension": d, "charges": [[...], ...],
///     "sr_ideal": [[1-based indices], ...], "max_cones": [[...], ...] }
ToricVarietyModel parse_variety(std::string_view text);
ToricVarietyModel load_variety(const std::filesystem::path& path);

/// Serializes back to the input document format.
std::string variety_to_json(const ToricVarietyModel& model);

/// Minimal Stanley-Reisner generators from the maximal cones: the Alexander
/// dual of the irrelevant ideal, i.e. the intersection of the prime ideals
/// generated by the complements of the maximal cones.
std::vector<VertexSet> sr_from_max_cones(std::span<const VertexSet> max_cones, int n);

/// Maximal faces of the complex whose minimal non-faces are the generators.
/// Enumerates all 2^n subsets; n <= 24.
std::vector<VertexSet> max_cones_from_sr(std::span<const VertexSet> sr_generators, int n, int d);

/// K_X = -(D_1 + ... + D_n).
DivisorClass canonical_class(const ToricVarietyModel& model);

/// Smoothness diagnostic: for every maximal cone, the charges of the
/// coordinates outside it form a Z-basis of Cl(X). Returns nullopt when the
/// model carries no fan data.
std::optional<bool> appears_smooth(const ToricVarietyModel& model);

}  // namespace toric
