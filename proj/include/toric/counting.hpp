#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/model.hpp"

namespace toric {

/// Cardinality of a neg-group: a nonnegative integer or Infinite.
class CountResult {
 public:
  static CountResult finite(BigInt value) { return CountResult(false, std::move(value)); }
  static CountResult infinite() { return CountResult(true, BigInt(0)); }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }
  /// Throws std::logic_error on Infinite.
  const BigInt& value() const;
  /// Decimal digits, or "inf".
  std::string to_string() const;

  bool operator==(const CountResult& other) const {
    return infinite_ == other.infinite_ && value_ == other.value_;
  }

 private:
  CountResult(bool infinite, BigInt value) : infinite_(infinite), value_(std::move(value)) {}
  bool infinite_;
  BigInt value_;
};

/// (α, σ): lattice points u with class α whose negative entries sit exactly at σ.
struct NegGroupQuery {
  DivisorClass alpha;
  VertexSet sigma = 0;
};

/// True iff A w = 0 has a solution with w >= 0, w != 0 (exact LP).
bool recession_test(const IntMatrix& a);

/// Counts and lists neg-group elements for one model. Substituting
/// u_i = -1 - w_i on σ and u_i = w_i elsewhere turns (α, σ) into the
/// nonnegative integer solutions of A_σ w = α + Σ_{i∈σ} q_i, where column i
/// of A_σ is ∓q_i. Solutions are enumerated by DFS over the coordinates with
/// exact LP bounds at every node.
///
/// Safe for concurrent use; the per-σ recession results are memoized.
class NegGroupCounter {
 public:
  explicit NegGroupCounter(const ToricVarietyModel& model);

  CountResult count(const NegGroupQuery& query) const;
  /// At most `limit` elements in lexicographic order of u. Throws ModelError
  /// for an infinite group.
  std::vector<DegreeVector> enumerate(const NegGroupQuery& query, std::size_t limit) const;
  /// The recession test for A_σ (depends on σ only).
  bool unbounded(VertexSet sigma) const;

  IntMatrix system_matrix(VertexSet sigma) const;
  std::vector<std::int64_t> system_rhs(const NegGroupQuery& query) const;

 private:
  int n_;
  int rank_;
  std::vector<std::vector<std::int64_t>> charges_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<VertexSet, bool> recession_;
};

CountResult neg_group_count(const ToricVarietyModel& model, const NegGroupQuery& query);
std::vector<DegreeVector> enumerate_neg_group(const ToricVarietyModel& model, const NegGroupQuery& query,
                                              std::size_t limit);

}  // namespace toric
