// Dense linear programming. Two independently coded solvers for the
// standard form  min c'z  s.t.  Az = b, z >= 0:
//
//   solve_standard_tableau  -- classic two-phase full-tableau simplex
//   solve_standard_revised  -- revised simplex with an explicit basis inverse
//
// Both return the optimal value, a primal solution, and the dual vector
// y = c_B B^{-1}. They share only the problem struct; pivoting, pricing and
// the phase-1 handling are separate implementations so they can serve as
// cross-checking oracles for each other.
#pragma once

#include <Eigen/Core>

#include <string>

namespace latpack::lp {

struct StandardLp {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

std::string to_string(LpStatus s);

struct SimplexResult {
  LpStatus status = LpStatus::IterationLimit;
  Eigen::VectorXd z;
  double objective = 0.0;
  Eigen::VectorXd y;  // dual multipliers of the equality rows
  long iterations = 0;
};

struct SimplexOptions {
  long max_iter = 200000;
  double tol = 1e-9;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int bland_trigger = 40;
};

SimplexResult solve_standard_tableau(const StandardLp& lp, const SimplexOptions& opts = {});
SimplexResult solve_standard_revised(const StandardLp& lp, const SimplexOptions& opts = {});

// General form  min c'x  s.t.  G x <= h, (optional) e'x = e_rhs, x free.
// Solved through its dual in standard form, so the simplex basis has the
// size of the variable count rather than the constraint count. The primal
// solution is recovered from the dual multipliers.
struct GeneralLp {
  Eigen::MatrixXd G;
  Eigen::VectorXd h;
  Eigen::RowVectorXd eq;  // may be empty
  double eq_rhs = 0.0;
  Eigen::VectorXd obj;
};

enum class Engine { Tableau, Revised };

SimplexResult solve_general_via_dual(const GeneralLp& lp, Engine engine, const SimplexOptions& opts = {});

}  // namespace latpack::lp
