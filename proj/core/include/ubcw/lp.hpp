// Exact rational linear programming over equality constraints.
#pragma once

#include <vector>

#include "ubcw/rational.hpp"

namespace ubcw {

struct LpResult {
  bool feasible = false;
  Rat objective;       // meaningful only when feasible
  std::vector<Rat> x;  // primal solution, one entry per column
};

// Minimize c.x subject to A x = b, x >= 0, with exact rational arithmetic.
// Two-phase dense-tableau simplex under Bland's rule, so it terminates on
// every input; throws PreconditionError on shape mismatch or an unbounded
// objective.
LpResult solve_lp_min(const std::vector<std::vector<Rat>>& a,
                      const std::vector<Rat>& b, const std::vector<Rat>& c);

}  // namespace ubcw
