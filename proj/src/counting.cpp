#include "toric/counting.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <stdexcept>

#include "toric/exact_lp.hpp"

namespace toric {

const BigInt& CountResult::value() const {
  if (infinite_) throw std::logic_error("CountResult::value on an infinite count");
  return value_;
}

std::string CountResult::to_string() const { return infinite_ ? "inf" : value_.get_str(); }

namespace {

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = Rational(static_cast<long>(a(r, c)));
  }
  return out;
}

IntMatrix columns_from(const IntMatrix& a, std::size_t first) {
  IntMatrix out(a.rows(), a.cols() - first);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = first; c < a.cols(); ++c) out(r, c - first) = a(r, c);
  }
  return out;
}

RationalMatrix rational_columns_from(const RationalMatrix& a, std::size_t first) {
  RationalMatrix out(a.rows(), a.cols() - first);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = first; c < a.cols(); ++c) out(r, c - first) = a(r, c);
  }
  return out;
}

BigInt floor_of(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Depth-first walk over nonnegative integer solutions of A w = b. Coordinate
// k is bounded by the exact LP relaxation over the unfixed tail; once the
// tail columns are linearly independent the remaining values are solved for
// directly.
class SolutionWalker {
 public:
  using Visitor = std::function<bool(const std::vector<BigInt>&)>;

  SolutionWalker(const IntMatrix& a, std::vector<bool> descending)
      : a_(to_rational(a)), n_(a.cols()), descending_(std::move(descending)), tail_independent_(n_ + 1, false) {
    for (std::size_t k = n_ + 1; k-- > 0;) {
      tail_independent_[k] = k == n_ || exact_rank(columns_from(a, k)) == n_ - k;
      if (!tail_independent_[k]) break;
    }
    tails_.reserve(n_);
    for (std::size_t k = 0; k < n_; ++k) tails_.push_back(rational_columns_from(a_, k));
    // Last dependent level: column k lies in the span of the independent
    // columns after it, so the fiber over w_k is a line and the integral
    // values of w_k form one residue class mod line_period_.
    for (std::size_t k = 0; k < n_; ++k) {
      if (tail_independent_[k] || !tail_independent_[k + 1]) continue;
      line_level_ = k;
      line_period_ = 1;
      if (k + 1 == n_) break;
      std::vector<Rational> column(a_.rows());
      for (std::size_t r = 0; r < a_.rows(); ++r) column[r] = a_(r, k);
      const auto y = solve_full_column_rank(tails_[k + 1], column);
      if (!y) throw InternalError("dependent column outside the span of its tail");
      for (const auto& v : *y) mpz_lcm(line_period_.get_mpz_t(), line_period_.get_mpz_t(), v.get_den_mpz_t());
    }
  }

  // Number of solutions, without visiting them one by one on the last free line.
  BigInt count(const std::vector<Rational>& b) {
    std::vector<BigInt> w(n_);
    return count_from(0, b, w);
  }

  // Returns false if the visitor asked to stop.
  bool walk(const std::vector<Rational>& b, const Visitor& visit) {
    std::vector<BigInt> w(n_);
    return descend(0, b, w, visit);
  }

 private:
  bool descend(std::size_t k, const std::vector<Rational>& b, std::vector<BigInt>& w, const Visitor& visit) {
    if (tail_independent_[k]) return finish(k, b, w, visit);
    const auto range = bounds(k, b);
    if (!range) return true;
    const auto& [lo, hi] = *range;

    std::vector<Rational> next(b.size());
    auto step = [&](const BigInt& v) {
      for (std::size_t r = 0; r < b.size(); ++r) next[r] = b[r] - a_(r, k) * v;
      w[k] = v;
      return descend(k + 1, next, w, visit);
    };
    if (descending_[k]) {
      for (BigInt v = hi; v >= lo; --v) {
        if (!step(v)) return false;
      }
    } else {
      for (BigInt v = lo; v <= hi; ++v) {
        if (!step(v)) return false;
      }
    }
    return true;
  }

  std::optional<std::pair<BigInt, BigInt>> bounds(std::size_t k, const std::vector<Rational>& b) const {
    const RationalMatrix& tail = tails_[k];
    std::vector<Rational> objective(n_ - k, Rational(0));
    objective[0] = 1;
    const LpResult upper = maximize(tail, b, objective);
    if (upper.status == LpStatus::kInfeasible) return std::nullopt;
    if (upper.status == LpStatus::kUnbounded) throw InternalError("neg-group enumeration on an unbounded system");
    objective[0] = -1;
    const LpResult lower = maximize(tail, b, objective);
    BigInt lo = ceil_of(-lower.value);
    BigInt hi = floor_of(upper.value);
    if (lo > hi) return std::nullopt;
    return std::make_pair(std::move(lo), std::move(hi));
  }

  BigInt count_from(std::size_t k, const std::vector<Rational>& b, std::vector<BigInt>& w) {
    if (tail_independent_[k]) {
      BigInt found = 0;
      finish(k, b, w, [&](const std::vector<BigInt>&) {
        found = 1;
        return true;
      });
      return found;
    }
    const auto range = bounds(k, b);
    if (!range) return 0;
    const auto& [lo, hi] = *range;
    std::vector<Rational> next(b.size());
    auto shifted = [&](const BigInt& v) {
      for (std::size_t r = 0; r < b.size(); ++r) next[r] = b[r] - a_(r, k) * v;
    };
    BigInt total = 0;
    if (k == line_level_) {
      // every w_k in [lo, hi] has a nonnegative rational fiber point; find
      // the residue class of the integral ones
      for (BigInt v = lo; v <= hi && v < lo + line_period_; ++v) {
        shifted(v);
        if (count_from(k + 1, next, w) != 0) {
          total = (hi - v) / line_period_ + 1;
          break;
        }
      }
      return total;
    }
    for (BigInt v = lo; v <= hi; ++v) {
      shifted(v);
      total += count_from(k + 1, next, w);
    }
    return total;
  }

  bool finish(std::size_t k, const std::vector<Rational>& b, std::vector<BigInt>& w, const Visitor& visit) {
    if (k == n_) {
      for (const auto& v : b) {
        if (v != 0) return true;
      }
      return visit(w);
    }
    const auto x = solve_full_column_rank(tails_[k], b);
    if (!x) return true;
    for (std::size_t j = 0; j < x->size(); ++j) {
      const Rational& v = (*x)[j];
      if (v < 0 || v.get_den() != 1) return true;
      w[k + j] = v.get_num();
    }
    return visit(w);
  }

  RationalMatrix a_;
  std::size_t n_;
  std::vector<bool> descending_;
  std::vector<bool> tail_independent_;
  std::vector<RationalMatrix> tails_;
  std::size_t line_level_ = static_cast<std::size_t>(-1);
  BigInt line_period_ = 1;
};

bool rationally_feasible(const IntMatrix& a, const std::vector<std::int64_t>& rhs) {
  std::vector<Rational> b;
  for (auto v : rhs) b.emplace_back(static_cast<long>(v));
  return maximize(to_rational(a), b, std::vector<Rational>(a.cols(), Rational(0))).status != LpStatus::kInfeasible;
}

}  // namespace

bool recession_test(const IntMatrix& a) {
  // nonzero w >= 0 with A w = 0 exists iff {A w = 0, Σ w = 1, w >= 0} is feasible
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n == 0) return false;
  RationalMatrix sys(m + 1, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) sys(r, c) = Rational(static_cast<long>(a(r, c)));
  }
  for (std::size_t c = 0; c < n; ++c) sys(m, c) = 1;
  std::vector<Rational> b(m + 1, Rational(0));
  b[m] = 1;
  return maximize(sys, b, std::vector<Rational>(n, Rational(0))).status != LpStatus::kInfeasible;
}

NegGroupCounter::NegGroupCounter(const ToricVarietyModel& model)
    : n_(model.n()), rank_(model.class_rank()), charges_(model.charges()) {}

IntMatrix NegGroupCounter::system_matrix(VertexSet sigma) const {
  IntMatrix a(static_cast<std::size_t>(rank_), static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const bool neg = contains_index(sigma, i);
    for (int r = 0; r < rank_; ++r) {
      const std::int64_t q = charges_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
      a(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) = neg ? -q : q;
    }
  }
  return a;
}

std::vector<std::int64_t> NegGroupCounter::system_rhs(const NegGroupQuery& query) const {
  if (query.alpha.size() != static_cast<std::size_t>(rank_)) {
    throw ModelError("divisor class " + format_class(query.alpha) + " has " + std::to_string(query.alpha.size()) +
                     " components, expected " + std::to_string(rank_));
  }
  std::vector<std::int64_t> b = query.alpha.coords;
  for (int i : set_indices(query.sigma)) {
    for (int r = 0; r < rank_; ++r) {
      b[static_cast<std::size_t>(r)] += charges_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    }
  }
  return b;
}

bool NegGroupCounter::unbounded(VertexSet sigma) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = recession_.find(sigma); it != recession_.end()) return it->second;
  }
  const bool result = recession_test(system_matrix(sigma));
  std::lock_guard lock(mutex_);
  return recession_.try_emplace(sigma, result).first->second;
}

CountResult NegGroupCounter::count(const NegGroupQuery& query) const {
  if (!is_subset(query.sigma, full_set(n_))) throw ModelError("neg set outside the coordinate range");
  const auto rhs = system_rhs(query);
  const IntMatrix a = system_matrix(query.sigma);
  if (unbounded(query.sigma)) {
    // TODO: an unbounded polyhedron without lattice points counts 0, not Inf;
    // deciding that needs an integer feasibility check over the recession cone.
    return rationally_feasible(a, rhs) ? CountResult::infinite() : CountResult::finite(BigInt(0));
  }
  std::vector<Rational> b;
  for (auto v : rhs) b.emplace_back(static_cast<long>(v));
  return CountResult::finite(SolutionWalker(a, std::vector<bool>(static_cast<std::size_t>(n_), false)).count(b));
}

std::vector<DegreeVector> NegGroupCounter::enumerate(const NegGroupQuery& query, std::size_t limit) const {
  if (!is_subset(query.sigma, full_set(n_))) throw ModelError("neg set outside the coordinate range");
  const auto rhs = system_rhs(query);
  if (unbounded(query.sigma) && rationally_feasible(system_matrix(query.sigma), rhs)) {
    throw ModelError("cannot enumerate the infinite neg-group " + format_class(query.alpha) + ", " +
                     format_set(query.sigma));
  }
  std::vector<DegreeVector> out;
  if (limit == 0) return out;
  std::vector<bool> descending(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) descending[static_cast<std::size_t>(i)] = contains_index(query.sigma, i);
  std::vector<Rational> b;
  for (auto v : rhs) b.emplace_back(static_cast<long>(v));
  SolutionWalker(system_matrix(query.sigma), std::move(descending)).walk(b, [&](const std::vector<BigInt>& w) {
    DegreeVector u(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::int64_t wi = w[i].get_si();
      u[i] = contains_index(query.sigma, static_cast<int>(i)) ? -1 - wi : wi;
    }
    out.push_back(std::move(u));
    return out.size() < limit;
  });
  return out;
}

CountResult neg_group_count(const ToricVarietyModel& model, const NegGroupQuery& query) {
  return NegGroupCounter(model).count(query);
}

std::vector<DegreeVector> enumerate_neg_group(const ToricVarietyModel& model, const NegGroupQuery& query,
                                              std::size_t limit) {
  return NegGroupCounter(model).enumerate(query, limit);
}

}  // namespace toric
