#pragma once

#include <vector>

#include "optnet/rational.hpp"

namespace optnet {

/// minimize c.x  subject to  A x >= b (or = b where equality[i] is set),
/// x_i >= 0 where nonneg[i] is set (x_i free otherwise). Solved exactly
/// over the rationals.
struct LpProblem {
  std::vector<Rat> objective;
  std::vector<std::vector<Rat>> constraints;  // rows of A
  std::vector<Rat> bounds;                    // b
  std::vector<bool> nonneg;                   // per-variable sign restriction
  std::vector<bool> equality;                 // per-row; empty = all inequalities

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_constraints() const { return static_cast<int>(constraints.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  std::vector<Rat> x;
};

/// Dense two-phase simplex, Bland's anti-cycling rule, exact pivoting.
LpSolution lp_solve(const LpProblem& problem);

}  // namespace optnet
