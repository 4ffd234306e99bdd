#pragma once

#include <vector>

#include "toric/linalg.hpp"

namespace toric {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> point;
};

/// maximize c.x  subject to  A x = b, x >= 0, in exact rational arithmetic.
/// Dense two-phase tableau simplex with Bland's rule, so it terminates on
/// degenerate problems.
LpResult maximize(const RationalMatrix& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& objective);

}  // namespace toric
