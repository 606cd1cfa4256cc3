#include "latpack/lpbound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "latpack/lattices.hpp"

namespace latpack::lpbound {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
// Beyond this t the Gaussian factor dominates any polynomial of admissible
// degree; values are below 1e-100 and are treated as exact zero to avoid
// overflow in the raw recurrence.
constexpr double kTailCutoff = 1200.0;
constexpr double kAcceptRel = 1e-9;

// L_j^(alpha)(0) = C(j+alpha, j), built multiplicatively.
double laguerre_at_zero(int j, double alpha) {
  double v = 1.0;
  for (int i = 1; i <= j; ++i) v *= (alpha + i) / i;
  return v;
}

}  // namespace

double laguerre(int j, double alpha, double x) {
  if (j < 0 || j > 200) throw std::invalid_argument("laguerre: j must be in [0, 200]");
  if (alpha <= -1.0) throw std::invalid_argument("laguerre: alpha must be > -1");
  if (j == 0) return 1.0;
  double lm = 1.0;
  double lc = 1.0 + alpha - x;
  for (int i = 1; i < j; ++i) {
    const double ln = ((2 * i + 1 + alpha - x) * lc - (i + alpha) * lm) / (i + 1);
    lm = lc;
    lc = ln;
  }
  return lc;
}

double RadialFunction::eval_t(double t, bool hat) const {
  if (t > kTailCutoff) return 0.0;
  const double alpha = dim / 2.0 - 1.0;
  const int deg = static_cast<int>(coeffs.size()) - 1;
  double acc = coeffs[0];
  if (deg >= 1) {
    double lm = 1.0;
    double lc = 1.0 + alpha - t;
    acc += (hat ? -1.0 : 1.0) * coeffs[1] * lc;
    double sign = 1.0;
    for (int j = 1; j < deg; ++j) {
      const double ln = ((2 * j + 1 + alpha - t) * lc - (j + alpha) * lm) / (j + 1);
      lm = lc;
      lc = ln;
      if (hat) sign = ((j + 1) % 2 == 0) ? 1.0 : -1.0;
      acc += (hat ? sign : 1.0) * coeffs[j + 1] * lc;
    }
  }
  return acc * std::exp(-t / 2.0);
}

double RadialFunction::operator()(double r) const { return eval_t(kTwoPi * r * r, false); }
double RadialFunction::hat(double r) const { return eval_t(kTwoPi * r * r, true); }
double RadialFunction::value_at_zero() const { return eval_t(0.0, false); }
double RadialFunction::hat_at_zero() const { return eval_t(0.0, true); }

namespace {

// One constraint row: the basis values at t, optionally with the (-1)^j
// Fourier signs, scaled so the largest magnitude is 1 (equilibration).
Eigen::RowVectorXd basis_row(int dim, int degree, double t, bool hat, bool flip_sign) {
  const double alpha = dim / 2.0 - 1.0;
  Eigen::RowVectorXd row(degree + 1);
  if (t > kTailCutoff) {
    row.setZero();
    return row;
  }
  const double g = std::exp(-t / 2.0);
  double lm = 1.0;
  row[0] = g;
  if (degree >= 1) {
    double lc = 1.0 + alpha - t;
    row[1] = (hat ? -1.0 : 1.0) * lc * g;
    for (int j = 1; j < degree; ++j) {
      const double ln = ((2 * j + 1 + alpha - t) * lc - (j + alpha) * lm) / (j + 1);
      lm = lc;
      lc = ln;
      const double s = hat ? ((j + 1) % 2 == 0 ? 1.0 : -1.0) : 1.0;
      row[j + 1] = s * lc * g;
    }
  }
  const double scale = row.cwiseAbs().maxCoeff();
  if (scale > 0.0) row /= scale;
  if (flip_sign) row = -row;
  return row;
}

}  // namespace

LPInstance build_lp(int d, int degree, double r0, int n_sign, int n_pos, double r_max, double s_max) {
  if (d < 1) throw std::invalid_argument("build_lp: dimension must be >= 1");
  if (degree < 4) throw std::invalid_argument("build_lp: degree must be >= 4");
  if (degree > 60) throw std::invalid_argument("build_lp: degree capped at 60 (double precision)");
  if (n_sign < 10 || n_pos < 10) throw std::invalid_argument("build_lp: grids need at least 10 points");
  if (!(r0 > 0.0) || r0 >= r_max) throw std::invalid_argument("build_lp: need 0 < r0 < R_max");
  if (!(s_max > 0.0)) throw std::invalid_argument("build_lp: need S_max > 0");

  LPInstance inst;
  inst.dim = d;
  inst.degree = degree;
  inst.r0 = r0;
  inst.r_max = r_max;
  inst.s_max = s_max;
  inst.n_sign = n_sign;
  inst.n_pos = n_pos;

  const int rows = n_sign + n_pos + 2;
  inst.lp.G.resize(rows, degree + 1);
  inst.lp.h = Eigen::VectorXd::Zero(rows);

  // f(r_i) <= 0 on a grid uniform in r^2.
  const double t_lo = kTwoPi * r0 * r0;
  const double t_hi = kTwoPi * r_max * r_max;
  for (int i = 0; i < n_sign; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / (n_sign - 1);
    inst.sign_t.push_back(t);
    inst.lp.G.row(i) = basis_row(d, degree, t, false, false);
  }
  // hat f(s_i) >= 0, stored as -hat f <= 0, on a grid uniform in s^2.
  const double u_hi = kTwoPi * s_max * s_max;
  for (int i = 0; i < n_pos; ++i) {
    const double t = u_hi * i / (n_pos - 1);
    inst.pos_t.push_back(t);
    inst.lp.G.row(n_sign + i) = basis_row(d, degree, t, true, true);
  }
  // Tail rows: the leading t-coefficient of f is c_D * (-1)^D / D!, of hat f
  // it is c_D / D!. Force the former <= 0 and the latter >= 0.
  {
    Eigen::RowVectorXd tail = Eigen::RowVectorXd::Zero(degree + 1);
    tail[degree] = (degree % 2 == 0) ? 1.0 : -1.0;
    inst.lp.G.row(n_sign + n_pos) = tail;  // (-1)^D c_D <= 0
    tail.setZero();
    tail[degree] = -1.0;
    inst.lp.G.row(n_sign + n_pos + 1) = tail;  // c_D >= 0
  }

  // hat f(0) = sum (-1)^j c_j C(j+d/2-1, j) = 1.
  const double alpha = d / 2.0 - 1.0;
  inst.lp.eq.resize(degree + 1);
  for (int j = 0; j <= degree; ++j)
    inst.lp.eq[j] = (j % 2 == 0 ? 1.0 : -1.0) * laguerre_at_zero(j, alpha);
  inst.lp.eq_rhs = 1.0;

  // Objective: f(0) = sum c_j C(j+d/2-1, j).
  inst.lp.obj.resize(degree + 1);
  for (int j = 0; j <= degree; ++j) inst.lp.obj[j] = laguerre_at_zero(j, alpha);

  return inst;
}

ViolationReport verify_solution(const RadialFunction& f, double r0, double r_max, double s_max,
                                int n_sign, int n_pos, int refine) {
  if (refine < 4) throw std::invalid_argument("verify_solution: refine must be >= 4");
  ViolationReport rep;
  const double scale = std::max(f.coeffs.cwiseAbs().maxCoeff(), 1e-300);

  auto check = [&](double t, bool hat) {
    const double v = f.eval_t(t, hat);
    const double viol = hat ? std::max(-v, 0.0) : std::max(v, 0.0);
    if (viol / scale > rep.max_relative) {
      rep.max_relative = viol / scale;
      rep.worst_t = t;
      rep.on_hat = hat;
    }
  };

  // Refined base grids plus the 10x extended range.
  const double t_lo = kTwoPi * r0 * r0;
  const double t_hi = kTwoPi * r_max * r_max;
  const double t_ext = kTwoPi * (10.0 * r_max) * (10.0 * r_max);
  const int ns = n_sign * refine;
  for (int i = 0; i <= ns; ++i) check(t_lo + (t_hi - t_lo) * i / ns, false);
  for (int i = 1; i <= ns; ++i) check(t_hi + (t_ext - t_hi) * i / ns, false);

  const double u_hi = kTwoPi * s_max * s_max;
  const double u_ext = kTwoPi * (10.0 * s_max) * (10.0 * s_max);
  const int np = n_pos * refine;
  for (int i = 0; i <= np; ++i) check(u_hi * i / np, true);
  for (int i = 1; i <= np; ++i) check(u_hi + (u_ext - u_hi) * i / np, true);

  return rep;
}

namespace {

// Local maxima of the violation on a fine grid; candidates to append as
// constraint rows.
std::vector<double> violating_points(const RadialFunction& f, double lo, double hi, int samples, bool hat,
                                     double threshold, int max_points) {
  std::vector<std::pair<double, double>> peaks;  // (violation, t)
  double prev = 0.0, cur = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = lo + (hi - lo) * i / samples;
    const double v = f.eval_t(t, hat);
    const double viol = hat ? -v : v;
    if (i >= 2 && cur > threshold && cur >= prev && cur >= viol) {
      peaks.emplace_back(cur, lo + (hi - lo) * (i - 1) / samples);
    }
    prev = cur;
    cur = viol;
  }
  if (cur > threshold) peaks.emplace_back(cur, hi);
  std::sort(peaks.rbegin(), peaks.rend());
  if (static_cast<int>(peaks.size()) > max_points) peaks.resize(max_points);
  std::vector<double> ts;
  for (const auto& [v, t] : peaks) ts.push_back(t);
  return ts;
}

}  // namespace

LPResult solve_with_refinement(const LPInstance& base, lp::Engine engine, int max_rounds) {
  LPResult out;
  out.r0 = base.r0;

  lp::GeneralLp work = base.lp;
  lp::SimplexOptions sopts;

  for (int round = 0; round < max_rounds; ++round) {
    const lp::SimplexResult sres = lp::solve_general_via_dual(work, engine, sopts);
    out.iterations += sres.iterations;
    out.refine_rounds = round + 1;
    if (sres.status != lp::LpStatus::Optimal) {
      out.status = sres.status;
      return out;
    }
    RadialFunction f{base.dim, sres.z};
    const ViolationReport rep =
        verify_solution(f, base.r0, base.r_max, base.s_max, base.n_sign, base.n_pos, 4);
    if (rep.max_relative <= kAcceptRel) {
      out.status = lp::LpStatus::Optimal;
      out.f = std::move(f);
      out.objective = out.f.value_at_zero();
      out.bound_density = out.objective * lattices::ball_volume(base.dim, base.r0 / 2.0);
      out.max_violation = rep.max_relative;
      return out;
    }

    // Append the worst violation peaks as fresh constraint rows.
    const double scale = std::max(f.coeffs.cwiseAbs().maxCoeff(), 1e-300);
    const double thresh = 0.25 * kAcceptRel * scale;
    const double t_lo = kTwoPi * base.r0 * base.r0;
    const double t_hi = kTwoPi * base.r_max * base.r_max;
    const double t_ext = kTwoPi * 100.0 * base.r_max * base.r_max;
    const double u_hi = kTwoPi * base.s_max * base.s_max;
    const double u_ext = kTwoPi * 100.0 * base.s_max * base.s_max;
    std::vector<std::pair<double, bool>> extra;
    for (double t : violating_points(f, t_lo, t_hi, base.n_sign * 8, false, thresh, 12))
      extra.emplace_back(t, false);
    for (double t : violating_points(f, t_hi, t_ext, base.n_sign * 2, false, thresh, 4))
      extra.emplace_back(t, false);
    for (double t : violating_points(f, 0.0, u_hi, base.n_pos * 8, true, thresh, 12))
      extra.emplace_back(t, true);
    for (double t : violating_points(f, u_hi, u_ext, base.n_pos * 2, true, thresh, 4))
      extra.emplace_back(t, true);
    if (extra.empty()) {
      // Violation sits below the peak threshold but above acceptance;
      // accept defeat on this instance rather than loop forever.
      out.status = lp::LpStatus::IterationLimit;
      out.max_violation = rep.max_relative;
      return out;
    }
    const Eigen::Index old_rows = work.G.rows();
    work.G.conservativeResize(old_rows + static_cast<Eigen::Index>(extra.size()), Eigen::NoChange);
    work.h.conservativeResize(old_rows + static_cast<Eigen::Index>(extra.size()));
    for (size_t i = 0; i < extra.size(); ++i) {
      work.G.row(old_rows + static_cast<Eigen::Index>(i)) =
          basis_row(base.dim, base.degree, extra[i].first, extra[i].second, extra[i].second);
      work.h[old_rows + static_cast<Eigen::Index>(i)] = 0.0;
    }
  }
  out.status = lp::LpStatus::IterationLimit;
  return out;
}

LPResult lp_density_bound(int d, const ScanOptions& opts) {
  if (d < 1 || d > 48) throw std::invalid_argument("lp_density_bound: dimension must be in [1, 48]");
  const double r_max = opts.r_max > 0 ? opts.r_max : std::max(6.0, 2.2 * std::sqrt(d / 4.0) + 4.0);
  const double s_max = opts.s_max > 0 ? opts.s_max : r_max;
  double lo = opts.r0_lo > 0 ? opts.r0_lo : 0.7;
  double hi = opts.r0_hi > 0 ? opts.r0_hi : 1.1 + 0.45 * std::sqrt(static_cast<double>(d));
  if (!(lo < hi)) throw std::invalid_argument("lp_density_bound: need r0_lo < r0_hi");

  LPResult best;
  best.status = lp::LpStatus::Infeasible;
  bool any = false;

  auto try_r0 = [&](double r0) {
    const LPInstance inst = build_lp(d, opts.degree, r0, opts.n_sign, opts.n_pos, r_max, s_max);
    LPResult res = solve_with_refinement(inst, opts.engine);
    if (res.status == lp::LpStatus::Optimal && (!any || res.bound_density < best.bound_density)) {
      best = std::move(res);
      any = true;
    }
  };

  const int npts = std::max(3, opts.coarse_points);
  for (int i = 0; i < npts; ++i) try_r0(lo + (hi - lo) * i / (npts - 1));

  double step = (hi - lo) / (npts - 1);
  for (int level = 0; level < opts.refine_levels && any; ++level) {
    const double center = best.r0;
    step /= 3.0;
    for (int i = -2; i <= 2; ++i) {
      if (i == 0) continue;
      const double r0 = center + i * step;
      if (r0 > 0.05) try_r0(r0);
    }
  }
  return best;
}

}  // namespace latpack::lpbound
