#include "toric/exact_lp.hpp"

namespace toric {
namespace {

class Tableau {
 public:
  Tableau(const RationalMatrix& a, const std::vector<Rational>& b)
      : m_(a.rows()), n_(a.cols()), t_(m_ + 1, n_ + m_ + 1), basis_(m_), active_(m_, true) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) t_(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
      t_(i, n_ + i) = 1;
      t_(i, rhs()) = flip ? Rational(-b[i]) : b[i];
      basis_[i] = n_ + i;
    }
  }

  std::size_t rhs() const { return n_ + m_; }

  // Objective row: reduced costs c_j - c_B B^-1 A_j; rhs entry holds -z.
  void load_objective(const std::vector<Rational>& cost) {
    const std::size_t obj = m_;
    for (std::size_t j = 0; j <= rhs(); ++j) {
      Rational v = j < cost.size() ? cost[j] : Rational(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i]) continue;
        const std::size_t bj = basis_[i];
        if (bj < cost.size() && cost[bj] != 0) v -= cost[bj] * t_(i, j);
      }
      t_(obj, j) = v;
    }
  }

  // Bland's rule over columns [0, limit). Returns false on unboundedness.
  bool optimize(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (t_(m_, j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || t_(i, enter) <= 0) continue;
        Rational ratio = t_(i, rhs()) / t_(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t_(row, col);
    for (std::size_t j = 0; j <= rhs(); ++j) t_(row, j) *= inv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row || (i < m_ && !active_[i])) continue;
      if (t_(i, col) == 0) continue;
      const Rational f = t_(i, col);
      for (std::size_t j = 0; j <= rhs(); ++j) {
        if (t_(row, j) != 0) t_(i, j) -= f * t_(row, j);
      }
    }
    basis_[row] = col;
  }

  // After phase one: pivot artificials out of the basis, dropping rows that
  // turn out to be linearly dependent.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col == n_) {
        active_[i] = false;
      } else {
        pivot(i, col);
      }
    }
  }

  Rational objective_value() const { return -t_(m_, rhs()); }

  std::vector<Rational> point() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (active_[i] && basis_[i] < n_) x[basis_[i]] = t_(i, rhs());
    }
    return x;
  }

  std::size_t vars() const { return n_; }
  std::size_t constraints() const { return m_; }

 private:
  std::size_t m_;
  std::size_t n_;
  RationalMatrix t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace

LpResult maximize(const RationalMatrix& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& objective) {
  if (b.size() != a.rows() || objective.size() != a.cols()) {
    throw InternalError("maximize: dimension mismatch");
  }
  Tableau tab(a, b);
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();

  std::vector<Rational> phase_one(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase_one[n + i] = -1;
  tab.load_objective(phase_one);
  tab.optimize(n);
  LpResult result;
  if (tab.objective_value() < 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  tab.expel_artificials();
  tab.load_objective(objective);
  if (!tab.optimize(n)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.value = tab.objective_value();
  result.point = tab.point();
  return result;
}

}  // namespace toric
