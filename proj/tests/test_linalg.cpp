#include "doctest.h"

#include <random>

#include "toric/exact_lp.hpp"
#include "toric/linalg.hpp"

using namespace toric;

namespace {

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix to_q(const IntMatrix& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = static_cast<long>(m(r, c));
  }
  return q;
}

}  // namespace

TEST_CASE("exact rank of small integer matrices") {
  CHECK(exact_rank(from_rows({{1, 0}, {0, 1}})) == 2);
  CHECK(exact_rank(from_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK(exact_rank(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(exact_rank(from_rows({{0, 1, 1}, {0, 1, 1}, {0, 0, 2}})) == 2);
  CHECK(exact_rank(IntMatrix(0, 3)) == 0);
}

TEST_CASE("rank falls back to big integers on overflow") {
  // Vandermonde with huge nodes: 3x3 minors overflow 64 bits.
  const std::int64_t big = 3'000'000'000LL;
  IntMatrix m = from_rows({{1, big, big * 2}, {1, big + 1, big * 2 + 7}, {1, big + 5, big * 2 + 3}});
  CHECK(exact_rank(m) == 3);
  IntMatrix dep = from_rows({{big, big - 1}, {2 * big, 2 * big - 2}});
  CHECK(exact_rank(dep) == 1);
}

TEST_CASE("sparse rank agrees with dense rank") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(0, 9)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(0, 9)(rng);
    const int density = std::uniform_int_distribution<int>(1, 4)(rng);
    IntMatrix m(rows, cols);
    std::vector<SparseVector> columns(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t r = 0; r < rows; ++r) {
        if (std::uniform_int_distribution<int>(0, 4)(rng) >= density) continue;
        const std::int64_t v = std::uniform_int_distribution<std::int64_t>(-3, 3)(rng);
        if (v == 0) continue;
        m(r, c) = v;
        columns[c].emplace_back(static_cast<std::uint32_t>(r), v);
      }
    }
    CHECK(sparse_rank(columns) == exact_rank(m));
  }
  const std::int64_t big = std::int64_t{1} << 40;
  CHECK(sparse_rank({{{0, big}, {1, big + 1}}, {{0, big + 3}, {1, big - 7}}, {{0, 1}}}) == 2);
  CHECK(sparse_rank({}) == 0);
}

TEST_CASE("determinant") {
  CHECK(exact_determinant(from_rows({{2, 1}, {1, 1}})) == 1);
  CHECK(exact_determinant(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(exact_determinant(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(exact_determinant(from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, -4}})) == -24);
}

TEST_CASE("full column rank solve") {
  auto a = to_q(from_rows({{1, 1}, {1, -1}, {2, 0}}));
  auto x = solve_full_column_rank(a, {Rational(3), Rational(1), Rational(4)});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve_full_column_rank(a, {Rational(3), Rational(1), Rational(5)}));
}

TEST_CASE("exact simplex") {
  SUBCASE("bounded optimum") {
    // max x + y s.t. x + 2y + s = 4, 3x + y + t = 6
    auto a = to_q(from_rows({{1, 2, 1, 0}, {3, 1, 0, 1}}));
    auto res = maximize(a, {Rational(4), Rational(6)}, {Rational(1), Rational(1), Rational(0), Rational(0)});
    REQUIRE(res.status == LpStatus::kOptimal);
    CHECK(res.value == Rational(14, 5));
  }
  SUBCASE("infeasible") {
    auto a = to_q(from_rows({{1, 1}}));
    CHECK(maximize(a, {Rational(-1)}, {Rational(0), Rational(0)}).status == LpStatus::kInfeasible);
  }
  SUBCASE("unbounded") {
    auto a = to_q(from_rows({{1, -1}}));
    CHECK(maximize(a, {Rational(0)}, {Rational(1), Rational(0)}).status == LpStatus::kUnbounded);
  }
  SUBCASE("redundant equality rows") {
    auto a = to_q(from_rows({{1, 1, 1}, {2, 2, 2}}));
    auto res = maximize(a, {Rational(3), Rational(6)}, {Rational(0), Rational(1), Rational(0)});
    REQUIRE(res.status == LpStatus::kOptimal);
    CHECK(res.value == 3);
  }
}

TEST_CASE("simplex optimum matches vertex enumeration on random boxes") {
  // max c.x over {x + s = u, x >= 0}: optimum is sum of positive c_i u_i
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> cap(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3;
    RationalMatrix a(n, 2 * n);
    std::vector<Rational> b(n);
    std::vector<Rational> c(2 * n, Rational(0));
    Rational expected = 0;
    for (std::size_t i = 0; i < n; ++i) {
      a(i, i) = 1;
      a(i, n + i) = 1;
      b[i] = cap(rng);
      c[i] = coef(rng);
      if (c[i] > 0) expected += c[i] * b[i];
    }
    auto res = maximize(a, b, c);
    REQUIRE(res.status == LpStatus::kOptimal);
    CHECK(res.value == expected);
  }
}
