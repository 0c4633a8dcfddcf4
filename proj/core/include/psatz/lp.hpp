#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psatz/rational.hpp"

namespace psatz {

/// Linear program in standard form: all variables >= 0, equality
/// constraints rows * x = rhs, and an optional linear objective to
/// minimize. All data exact rational.
struct LinearProgram {
  std::vector<std::string> variables;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::optional<std::vector<Rational>> objective;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> assignment;   // vertex solution when feasible
  Rational objective_value;           // meaningful when feasible and an objective was given
};

/// Exact two-phase simplex with Bland's anti-cycling rule. Phase one
/// minimizes the sum of artificial variables; a strictly positive optimum
/// certifies infeasibility. Without an objective the phase-one vertex is
/// returned as-is.
LpSolution lp_solve(const LinearProgram& lp);

}  // namespace psatz
