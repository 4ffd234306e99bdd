#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "toric/types.hpp"

namespace toric {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RationalMatrix = Matrix<Rational>;

/// Rank over Q by fraction-free (Bareiss) elimination. Runs on machine
/// words and restarts with GMP integers if an intermediate value overflows.
std::size_t exact_rank(const IntMatrix& m);
std::size_t exact_rank(const Matrix<BigInt>& m);

/// Sparse integer vector: (coordinate, value) pairs, coordinates strictly
/// increasing, no zero values.
using SparseVector = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Rank over Q of a set of sparse vectors. Eliminates one vector at a time,
/// always pivoting on the shortest remaining vector so fill-in stays low on
/// boundary matrices.
std::size_t sparse_rank(const std::vector<SparseVector>& vectors);

/// Determinant of a square integer matrix (Bareiss).
BigInt exact_determinant(const IntMatrix& m);

/// Unique solution of A x = b when A has full column rank; nullopt if the
/// system is inconsistent. Throws InternalError if A is column-rank deficient.
std::optional<std::vector<Rational>> solve_full_column_rank(const RationalMatrix& a,
                                                            const std::vector<Rational>& b);

}  // namespace toric
