#pragma once

#include "sonc/linalg.hpp"
#include "sonc/rational.hpp"

namespace sonc {

// Exact rational LP:  maximize c.x  subject to  A x <= b,  x free.
// Two-phase primal simplex with Bland's rule; sizes here are tiny.
struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status;
  Rat value;
  RatVec x;
};

LPResult lp_maximize(const Mat& A, const RatVec& b, const RatVec& c);

// Convenience: is there x with A x <= b and E x = f?
bool lp_feasible(const Mat& A, const RatVec& b, const Mat& E, const RatVec& f);

}  // namespace sonc
