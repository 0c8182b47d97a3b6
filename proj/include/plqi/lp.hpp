#pragma once

#include "plqi/types.hpp"

namespace plqi {

// Dense two-phase simplex method for tiny problems:
//   maximize c.x  subject to  A x = b, x >= 0.
// Bland's rule, so it terminates deterministically. Sized for the
// complex-validation LPs (a few dozen variables at most).
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  double objective = 0.0;
  Vec x;
};

LpResult solve_lp(const Mat& a, const Vec& b, const Vec& c);

}  // namespace plqi
