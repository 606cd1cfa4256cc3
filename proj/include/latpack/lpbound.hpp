// Numerical Cohn-Elkies linear programming bound for sphere packing.
//
// Candidate functions live in the Laguerre-Gaussian Fourier eigenbasis
//   f_j(r) = L_j^{(d/2-1)}(2 pi r^2) * exp(-pi r^2),
// whose d-dimensional radial Fourier transform is (-1)^j f_j. A candidate
// f = sum c_j f_j therefore has hat f = sum (-1)^j c_j f_j in closed form,
// and the Cohn-Elkies conditions (f <= 0 beyond r0, hat f >= 0 everywhere,
// hat f(0) = 1) become a finite LP after sampling. The bound on the packing
// density is f(0) * vol(B_{r0/2}).
//
// Certification is numerical, not rigorous: an accepted solution must pass a
// verification sweep on refined and extended grids with relative sign
// violations below 1e-9.
#pragma once

#include <Eigen/Core>

#include "latpack/simplex.hpp"

namespace latpack::lpbound {

// Generalized Laguerre polynomial L_j^(alpha)(x) by the three-term
// recurrence; no factorials are formed.
double laguerre(int j, double alpha, double x);

struct RadialFunction {
  int dim = 0;
  Eigen::VectorXd coeffs;  // c_0 .. c_D

  double operator()(double r) const;
  double hat(double r) const;
  double value_at_zero() const;
  double hat_at_zero() const;

  // Value of f (or hat f) at t = 2 pi r^2, shared by the grid builders.
  double eval_t(double t, bool hat) const;
};

struct LPInstance {
  int dim = 0;
  int degree = 0;
  double r0 = 0.0;
  double r_max = 0.0;
  double s_max = 0.0;
  int n_sign = 0;
  int n_pos = 0;
  // Inequalities G c <= h (sign rows, positivity rows, two tail rows),
  // the normalization row eq * c = 1, and the objective f(0).
  lp::GeneralLp lp;
  // Sample points in t = 2 pi r^2 for each inequality row (tail rows excluded).
  std::vector<double> sign_t;
  std::vector<double> pos_t;
};

// Sign grid uniform in r^2 on [r0^2, R_max^2], positivity grid uniform in
// s^2 on [0, S_max^2]; 2 leading-coefficient tail rows. Row count is
// n_sign + n_pos + 2.
LPInstance build_lp(int d, int degree, double r0, int n_sign, int n_pos, double r_max, double s_max);

struct LPResult {
  lp::LpStatus status = lp::LpStatus::IterationLimit;
  double bound_density = 0.0;
  RadialFunction f;
  double max_violation = 0.0;  // relative to the sup-norm of the coefficients
  long iterations = 0;
  double r0 = 0.0;
  double objective = 0.0;  // f(0)
  int refine_rounds = 0;
};

struct ViolationReport {
  double max_relative = 0.0;
  double worst_t = 0.0;
  bool on_hat = false;
};

// Re-evaluates the sign conditions on grids `refine` times finer plus a 10x
// extended range; reports the worst violation relative to ||c||_inf.
ViolationReport verify_solution(const RadialFunction& f, double r0, double r_max, double s_max,
                                int n_sign, int n_pos, int refine);

// Solves one instance (through the dual; see simplex.hpp) and then refines:
// violated sample points found by the verification sweep are appended as
// constraints until the sweep passes the 1e-9 relative threshold.
LPResult solve_with_refinement(const LPInstance& base, lp::Engine engine = lp::Engine::Revised,
                               int max_rounds = 40);

struct ScanOptions {
  int degree = 30;
  int n_sign = 400;
  int n_pos = 400;
  double r_max = 0.0;  // 0: choose from the dimension
  double s_max = 0.0;
  double r0_lo = 0.0;  // 0: default scan window
  double r0_hi = 0.0;
  int coarse_points = 9;
  int refine_levels = 2;
  lp::Engine engine = lp::Engine::Revised;
};

// Coarse-then-refined scan over r0; returns the smallest verified bound.
LPResult lp_density_bound(int d, const ScanOptions& opts = {});

}  // namespace latpack::lpbound
