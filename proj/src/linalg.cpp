#include "toric/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <utility>

namespace toric {
namespace {

struct Overflow {};

struct CheckedOps {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
};

struct BigOps {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
};

template <typename T>
bool is_zero(const T& v) {
  return v == 0;
}

template <typename T>
T exact_div(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, BigInt>) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  } else {
    return a / b;
  }
}

// Bareiss elimination over columns in order, skipping columns without a
// pivot. Entries after step k are (k+1)-minors, so every division is exact.
// Returns the rank; `det` receives the signed leading minor when the matrix
// is square and nonsingular.
template <typename T, typename Ops>
std::size_t bareiss(Matrix<T> m, T* det) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  T prev(1);
  std::size_t rank = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!is_zero(m(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      m.swap_rows(pivot, rank);
      sign = -sign;
    }
    const T p = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T f = m(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(r, j) = exact_div<T>(Ops::sub(Ops::mul(p, m(r, j)), Ops::mul(f, m(rank, j))), prev);
      }
      m(r, c) = T(0);
    }
    prev = p;
    ++rank;
  }
  if (det != nullptr) {
    *det = (rank == rows && rows == cols) ? T(prev * sign) : T(0);
  }
  return rank;
}

Matrix<BigInt> widen(const IntMatrix& m) {
  Matrix<BigInt> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = BigInt(static_cast<long>(m(r, c)));
  }
  return out;
}

template <typename T>
T abs_value(const T& v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return abs(v);
  } else {
    return v < 0 ? -v : v;
  }
}

template <typename T>
T gcd_value(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, BigInt>) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  } else {
    return std::gcd(a, b);
  }
}

template <typename T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

// Fraction-free sparse elimination. A pivot vector is removed after its
// coordinate has been cleared from every other live vector, so each pivot
// adds exactly one to the rank.
template <typename T, typename Ops>
std::size_t sparse_eliminate(std::vector<SparseRow<T>> rows) {
  std::uint32_t dim = 0;
  for (const auto& r : rows) {
    if (!r.empty()) dim = std::max(dim, r.back().first + 1);
  }
  std::vector<std::vector<std::size_t>> occurs(dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [c, v] : rows[i]) occurs[c].push_back(i);
  }
  std::vector<bool> alive(rows.size(), true);
  using Item = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (std::size_t i = 0; i < rows.size(); ++i) queue.emplace(rows[i].size(), i);

  std::size_t rank = 0;
  SparseRow<T> merged;
  while (!queue.empty()) {
    const auto [len, id] = queue.top();
    queue.pop();
    if (!alive[id] || rows[id].size() != len) continue;
    alive[id] = false;
    if (len == 0) continue;
    const auto& pivot_row = rows[id];
    // smallest magnitude entry, then the sparsest coordinate
    std::size_t best = 0;
    for (std::size_t k = 1; k < pivot_row.size(); ++k) {
      const auto a = abs_value(pivot_row[k].second);
      const auto b = abs_value(pivot_row[best].second);
      if (a < b || (a == b && occurs[pivot_row[k].first].size() < occurs[pivot_row[best].first].size())) best = k;
    }
    const std::uint32_t col = pivot_row[best].first;
    const T p = pivot_row[best].second;
    ++rank;
    for (std::size_t other : occurs[col]) {
      if (!alive[other]) continue;
      auto& row = rows[other];
      auto it = std::lower_bound(row.begin(), row.end(), col,
                                 [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it == row.end() || it->first != col) continue;
      const T q = it->second;
      merged.clear();
      auto a = row.begin();
      auto b = pivot_row.begin();
      while (a != row.end() || b != pivot_row.end()) {
        if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
          merged.emplace_back(a->first, Ops::mul(p, a->second));
          ++a;
        } else if (a == row.end() || b->first < a->first) {
          merged.emplace_back(b->first, Ops::sub(T(0), Ops::mul(q, b->second)));
          occurs[b->first].push_back(other);
          ++b;
        } else {
          T v = Ops::sub(Ops::mul(p, a->second), Ops::mul(q, b->second));
          if (!is_zero(v)) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      T g(0);
      for (const auto& e : merged) g = gcd_value(g, abs_value(e.second));
      if (!is_zero(g) && g != 1) {
        for (auto& e : merged) e.second = exact_div<T>(e.second, g);
      }
      row.swap(merged);
      queue.emplace(row.size(), other);
    }
    occurs[col].clear();
  }
  return rank;
}

}  // namespace

std::size_t sparse_rank(const std::vector<SparseVector>& vectors) {
  try {
    return sparse_eliminate<std::int64_t, CheckedOps>(vectors);
  } catch (const Overflow&) {
    std::vector<SparseRow<BigInt>> wide;
    wide.reserve(vectors.size());
    for (const auto& v : vectors) {
      SparseRow<BigInt> row;
      for (const auto& [c, x] : v) row.emplace_back(c, BigInt(static_cast<long>(x)));
      wide.push_back(std::move(row));
    }
    return sparse_eliminate<BigInt, BigOps>(std::move(wide));
  }
}

std::size_t exact_rank(const IntMatrix& m) {
  try {
    return bareiss<std::int64_t, CheckedOps>(m, nullptr);
  } catch (const Overflow&) {
    return bareiss<BigInt, BigOps>(widen(m), nullptr);
  }
}

std::size_t exact_rank(const Matrix<BigInt>& m) { return bareiss<BigInt, BigOps>(m, nullptr); }

BigInt exact_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InternalError("determinant of a non-square matrix");
  if (m.rows() == 0) return BigInt(1);
  BigInt det;
  bareiss<BigInt, BigOps>(widen(m), &det);
  return det;
}

std::optional<std::vector<Rational>> solve_full_column_rank(const RationalMatrix& a,
                                                            const std::vector<Rational>& b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  RationalMatrix m(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = a(r, c);
    m(r, cols) = b[r];
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) throw InternalError("solve_full_column_rank: rank-deficient system");
    m.swap_rows(pivot, rank);
    const Rational inv = 1 / m(rank, c);
    for (std::size_t j = c; j <= cols; ++j) m(rank, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j <= cols; ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (m(r, cols) != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = m(c, cols);
  return x;
}

}  // namespace toric
