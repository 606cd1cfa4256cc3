#include "latpack/simplex.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace latpack::lp {

namespace {

constexpr double kPivotTol = 1e-10;

struct Prepared {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  std::vector<int> row_sign;  // original row i was multiplied by row_sign[i]
};

Prepared prepare(const StandardLp& lp) {
  Prepared p{lp.A, lp.b, lp.c, std::vector<int>(static_cast<size_t>(lp.b.size()), 1)};
  for (Eigen::Index i = 0; i < p.b.size(); ++i) {
    if (p.b[i] < 0) {
      p.A.row(i) = -p.A.row(i);
      p.b[i] = -p.b[i];
      p.row_sign[static_cast<size_t>(i)] = -1;
    }
  }
  return p;
}

void unflip_dual(Eigen::VectorXd& y, const std::vector<int>& row_sign) {
  for (Eigen::Index i = 0; i < y.size(); ++i) y[i] *= row_sign[static_cast<size_t>(i)];
}

}  // namespace

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::IterationLimit: return "iteration-limit";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Engine 1: full-tableau two-phase simplex.
// ---------------------------------------------------------------------------

SimplexResult solve_standard_tableau(const StandardLp& lp, const SimplexOptions& opts) {
  Prepared p = prepare(lp);
  int m = static_cast<int>(p.b.size());
  const int n = static_cast<int>(p.c.size());

  // Columns: n structural + m artificial, then the rhs.
  Eigen::MatrixXd T(m, n + m + 1);
  T.leftCols(n) = p.A;
  T.middleCols(n, m) = Eigen::MatrixXd::Identity(m, m);
  T.col(n + m) = p.b;
  std::vector<int> basis(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = n + i;
  std::vector<int> art_of_row(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) art_of_row[static_cast<size_t>(i)] = i;  // artificial column n+i ~ original row i

  SimplexResult res;
  long iter = 0;
  int degenerate_streak = 0;
  bool bland = false;

  auto pivot = [&](int row, int col) {
    T.row(row) /= T(row, col);
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      const double f = T(i, col);
      if (f != 0.0) T.row(i) -= f * T.row(row);
    }
    basis[static_cast<size_t>(row)] = col;
  };

  auto run_phase = [&](const Eigen::VectorXd& cost, int eligible_cols) -> LpStatus {
    const Eigen::Index ncols = T.cols() - 1;  // all variable columns, rhs excluded
    Eigen::RowVectorXd obj = cost.transpose();
    for (int i = 0; i < m; ++i) {
      const int bi = basis[static_cast<size_t>(i)];
      const double cb = cost[bi];
      if (cb != 0.0) obj -= cb * T.row(i).head(ncols).eval();
    }
    while (true) {
      if (iter++ > opts.max_iter) return LpStatus::IterationLimit;
      int enter = -1;
      if (bland) {
        for (int j = 0; j < eligible_cols; ++j) {
          if (obj[j] < -opts.tol) {
            enter = j;
            break;
          }
        }
      } else {
        double best = -opts.tol;
        for (int j = 0; j < eligible_cols; ++j) {
          if (obj[j] < best) {
            best = obj[j];
            enter = j;
          }
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m; ++i) {
        const double a = T(i, enter);
        if (a > kPivotTol) {
          const double ratio = T(i, ncols) / a;
          if (leave < 0 || ratio < best_ratio - 1e-12 ||
              (std::abs(ratio - best_ratio) <= 1e-12 &&
               basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      if (best_ratio < opts.tol) {
        if (++degenerate_streak > opts.bland_trigger) bland = true;
      } else {
        degenerate_streak = 0;
      }
      const double obj_enter = obj[enter];
      pivot(leave, enter);
      obj -= obj_enter * T.row(leave).head(ncols);
      obj[enter] = 0.0;
    }
  };

  // Phase 1: minimize the sum of artificials.
  Eigen::VectorXd phase1_cost = Eigen::VectorXd::Zero(n + m);
  phase1_cost.tail(m).setOnes();
  LpStatus st = run_phase(phase1_cost, n + m);
  if (st == LpStatus::IterationLimit) {
    res.status = st;
    res.iterations = iter;
    return res;
  }
  double feas = 0.0;
  for (int i = 0; i < m; ++i)
    if (basis[static_cast<size_t>(i)] >= n) feas += T(i, n + m);
  const double feas_scale = 1.0 + p.b.lpNorm<Eigen::Infinity>();
  if (st == LpStatus::Unbounded || feas > 1e-7 * feas_scale) {
    res.status = LpStatus::Infeasible;
    res.iterations = iter;
    return res;
  }

  // Drive remaining artificials out of the basis; rows that cannot be
  // pivoted on a structural column are redundant and get dropped.
  std::vector<int> keep;
  for (int i = 0; i < m; ++i) {
    if (basis[static_cast<size_t>(i)] < n) {
      keep.push_back(i);
      continue;
    }
    int col = -1;
    double best = 1e-7;
    for (int j = 0; j < n; ++j) {
      if (std::abs(T(i, j)) > best) {
        best = std::abs(T(i, j));
        col = j;
      }
    }
    if (col >= 0) {
      pivot(i, col);
      keep.push_back(i);
    }
  }
  if (static_cast<int>(keep.size()) < m) {
    Eigen::MatrixXd T2(static_cast<int>(keep.size()), T.cols());
    std::vector<int> basis2, art2;
    for (size_t r = 0; r < keep.size(); ++r) {
      T2.row(static_cast<Eigen::Index>(r)) = T.row(keep[r]);
      basis2.push_back(basis[static_cast<size_t>(keep[r])]);
      art2.push_back(art_of_row[static_cast<size_t>(keep[r])]);
    }
    T = std::move(T2);
    basis = std::move(basis2);
    art_of_row = std::move(art2);
    m = static_cast<int>(keep.size());
  }

  // Phase 2 on the original costs; artificial columns are not eligible.
  Eigen::VectorXd phase2_cost = Eigen::VectorXd::Zero(n + static_cast<int>(p.b.size()));
  phase2_cost.head(n) = p.c;
  degenerate_streak = 0;
  st = run_phase(phase2_cost, n);
  res.iterations = iter;
  if (st != LpStatus::Optimal) {
    res.status = st;
    return res;
  }

  res.status = LpStatus::Optimal;
  res.z = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (basis[static_cast<size_t>(i)] < n) res.z[basis[static_cast<size_t>(i)]] = T(i, T.cols() - 1);
  }
  res.objective = p.c.dot(res.z);

  // Dual vector from the final reduced costs of the artificial columns
  // (cost 0, column e_i): reduced cost = -y_i.
  Eigen::RowVectorXd obj = phase2_cost.transpose();
  for (int i = 0; i < m; ++i) {
    const int bi = basis[static_cast<size_t>(i)];
    const double cb = phase2_cost[bi];
    if (cb != 0.0) obj -= cb * T.row(i).head(T.cols() - 1).eval();
  }
  // Rows dropped as redundant keep multiplier 0 (their artificial column is
  // identically zero in the reduced tableau, so the formula still applies).
  res.y = Eigen::VectorXd::Zero(p.b.size());
  for (int r = 0; r < static_cast<int>(p.b.size()); ++r) {
    res.y[r] = -obj[n + r];
  }
  unflip_dual(res.y, p.row_sign);
  return res;
}

// ---------------------------------------------------------------------------
// Engine 2: revised simplex with explicit basis inverse.
// ---------------------------------------------------------------------------

namespace {

struct RevisedState {
  Eigen::MatrixXd A;  // structural + artificial columns
  Eigen::VectorXd b;
  Eigen::VectorXd cost;
  std::vector<int> basis;
  Eigen::MatrixXd binv;
  Eigen::VectorXd xb;
  int m = 0;
  int n_total = 0;

  void refactor() {
    Eigen::MatrixXd B(m, m);
    for (int i = 0; i < m; ++i) B.col(i) = A.col(basis[static_cast<size_t>(i)]);
    binv = B.partialPivLu().inverse();
    xb = binv * b;
  }
};

LpStatus revised_iterate(RevisedState& st, int eligible_cols, const SimplexOptions& opts, long& iter) {
  int degenerate_streak = 0;
  bool bland = false;
  int since_refactor = 0;
  while (true) {
    if (iter++ > opts.max_iter) return LpStatus::IterationLimit;
    if (++since_refactor >= 64) {
      st.refactor();
      since_refactor = 0;
    }
    Eigen::VectorXd cb(st.m);
    for (int i = 0; i < st.m; ++i) cb[i] = st.cost[st.basis[static_cast<size_t>(i)]];
    const Eigen::RowVectorXd y = cb.transpose() * st.binv;

    int enter = -1;
    double best = -opts.tol;
    for (int j = 0; j < eligible_cols; ++j) {
      const double d = st.cost[j] - y.dot(st.A.col(j));
      if (bland) {
        if (d < -opts.tol) {
          enter = j;
          break;
        }
      } else if (d < best) {
        best = d;
        enter = j;
      }
    }
    if (enter < 0) return LpStatus::Optimal;

    const Eigen::VectorXd w = st.binv * st.A.col(enter);
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < st.m; ++i) {
      if (w[i] > kPivotTol) {
        const double ratio = st.xb[i] / w[i];
        if (leave < 0 || ratio < best_ratio - 1e-12 ||
            (std::abs(ratio - best_ratio) <= 1e-12 &&
             st.basis[static_cast<size_t>(i)] < st.basis[static_cast<size_t>(leave)])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) return LpStatus::Unbounded;
    if (best_ratio < opts.tol) {
      if (++degenerate_streak > opts.bland_trigger) bland = true;
    } else {
      degenerate_streak = 0;
    }

    // Product-form update of B^{-1} and x_B.
    const double piv = w[leave];
    st.xb[leave] /= piv;
    st.binv.row(leave) /= piv;
    for (int i = 0; i < st.m; ++i) {
      if (i == leave) continue;
      const double f = w[i];
      if (f != 0.0) {
        st.xb[i] -= f * st.xb[leave];
        st.binv.row(i) -= f * st.binv.row(leave);
      }
    }
    st.basis[static_cast<size_t>(leave)] = enter;
  }
}

}  // namespace

SimplexResult solve_standard_revised(const StandardLp& lp, const SimplexOptions& opts) {
  Prepared p = prepare(lp);
  int m = static_cast<int>(p.b.size());
  const int n = static_cast<int>(p.c.size());

  RevisedState st;
  st.m = m;
  st.n_total = n + m;
  st.A.resize(m, n + m);
  st.A.leftCols(n) = p.A;
  st.A.rightCols(m) = Eigen::MatrixXd::Identity(m, m);
  st.b = p.b;
  st.basis.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) st.basis[static_cast<size_t>(i)] = n + i;
  st.binv = Eigen::MatrixXd::Identity(m, m);
  st.xb = p.b;

  SimplexResult res;
  long iter = 0;

  // Phase 1.
  st.cost = Eigen::VectorXd::Zero(n + m);
  st.cost.tail(m).setOnes();
  LpStatus status = revised_iterate(st, n + m, opts, iter);
  if (status == LpStatus::IterationLimit) {
    res.status = status;
    res.iterations = iter;
    return res;
  }
  st.refactor();
  double feas = 0.0;
  for (int i = 0; i < m; ++i)
    if (st.basis[static_cast<size_t>(i)] >= n) feas += std::abs(st.xb[i]);
  if (status == LpStatus::Unbounded || feas > 1e-7 * (1.0 + p.b.lpNorm<Eigen::Infinity>())) {
    res.status = LpStatus::Infeasible;
    res.iterations = iter;
    return res;
  }

  // Drive out or drop rows whose artificials are stuck in the basis.
  std::vector<int> keep_rows;
  {
    bool dropped = false;
    for (int i = 0; i < m; ++i) {
      if (st.basis[static_cast<size_t>(i)] < n) {
        keep_rows.push_back(i);
        continue;
      }
      int col = -1;
      double best = 1e-7;
      for (int j = 0; j < n; ++j) {
        const double wij = st.binv.row(i).dot(st.A.col(j));
        if (std::abs(wij) > best) {
          best = std::abs(wij);
          col = j;
        }
      }
      if (col >= 0) {
        const Eigen::VectorXd w = st.binv * st.A.col(col);
        const double piv = w[i];
        st.xb[i] /= piv;
        st.binv.row(i) /= piv;
        for (int r = 0; r < m; ++r) {
          if (r == i) continue;
          const double f = w[r];
          if (f != 0.0) {
            st.xb[r] -= f * st.xb[i];
            st.binv.row(r) -= f * st.binv.row(i);
          }
        }
        st.basis[static_cast<size_t>(i)] = col;
        keep_rows.push_back(i);
      } else {
        dropped = true;
      }
    }
    if (dropped) {
      Eigen::MatrixXd A2(static_cast<int>(keep_rows.size()), n + static_cast<int>(keep_rows.size()));
      Eigen::VectorXd b2(static_cast<int>(keep_rows.size()));
      std::vector<int> basis2;
      for (size_t r = 0; r < keep_rows.size(); ++r) {
        A2.block(static_cast<Eigen::Index>(r), 0, 1, n) = p.A.row(keep_rows[r]);
        b2[static_cast<Eigen::Index>(r)] = p.b[keep_rows[r]];
        basis2.push_back(st.basis[static_cast<size_t>(keep_rows[r])]);
      }
      A2.rightCols(static_cast<int>(keep_rows.size())) =
          Eigen::MatrixXd::Identity(static_cast<int>(keep_rows.size()), static_cast<int>(keep_rows.size()));
      st.A = std::move(A2);
      st.b = std::move(b2);
      st.basis = std::move(basis2);
      st.m = m = static_cast<int>(keep_rows.size());
      st.n_total = n + m;
      st.refactor();
    }
  }

  // Phase 2.
  st.cost = Eigen::VectorXd::Zero(n + m);
  st.cost.head(n) = p.c;
  status = revised_iterate(st, n, opts, iter);
  res.iterations = iter;
  if (status != LpStatus::Optimal) {
    res.status = status;
    return res;
  }
  st.refactor();

  res.status = LpStatus::Optimal;
  res.z = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (st.basis[static_cast<size_t>(i)] < n) res.z[st.basis[static_cast<size_t>(i)]] = st.xb[i];
  res.objective = p.c.dot(res.z);

  Eigen::VectorXd cb(m);
  for (int i = 0; i < m; ++i) cb[i] = st.cost[st.basis[static_cast<size_t>(i)]];
  const Eigen::RowVectorXd y = cb.transpose() * st.binv;
  res.y = Eigen::VectorXd::Zero(p.b.size());
  if (keep_rows.empty() || static_cast<int>(keep_rows.size()) == static_cast<int>(p.b.size())) {
    res.y = y.transpose();
  } else {
    for (size_t r = 0; r < keep_rows.size(); ++r) res.y[keep_rows[r]] = y[static_cast<Eigen::Index>(r)];
  }
  unflip_dual(res.y, p.row_sign);
  return res;
}

// ---------------------------------------------------------------------------
// General form via the dual.
// ---------------------------------------------------------------------------

SimplexResult solve_general_via_dual(const GeneralLp& lp, Engine engine, const SimplexOptions& opts) {
  const int n = static_cast<int>(lp.obj.size());
  const int m = static_cast<int>(lp.h.size());
  const bool has_eq = lp.eq.size() > 0;
  if (lp.G.cols() != n || lp.G.rows() != m)
    throw std::invalid_argument("solve_general_via_dual: inconsistent dimensions");

  StandardLp dual;
  const int cols = m + (has_eq ? 2 : 0);
  dual.A.resize(n, cols);
  dual.A.leftCols(m) = lp.G.transpose();
  if (has_eq) {
    dual.A.col(m) = lp.eq.transpose();
    dual.A.col(m + 1) = -lp.eq.transpose();
  }
  dual.b = -lp.obj;
  dual.c.resize(cols);
  dual.c.head(m) = lp.h;
  if (has_eq) {
    dual.c[m] = lp.eq_rhs;
    dual.c[m + 1] = -lp.eq_rhs;
  }

  const SimplexResult dres =
      engine == Engine::Tableau ? solve_standard_tableau(dual, opts) : solve_standard_revised(dual, opts);

  SimplexResult res;
  res.iterations = dres.iterations;
  switch (dres.status) {
    case LpStatus::Optimal: {
      res.status = LpStatus::Optimal;
      res.z = dres.y;  // primal solution = dual multipliers of the dual
      res.objective = lp.obj.dot(res.z);
      res.y = dres.z.head(m);  // multipliers of the inequality rows
      break;
    }
    case LpStatus::Unbounded:
      res.status = LpStatus::Infeasible;
      break;
    case LpStatus::Infeasible:
      res.status = LpStatus::Unbounded;
      break;
    case LpStatus::IterationLimit:
      res.status = LpStatus::IterationLimit;
      break;
  }
  return res;
}

}  // namespace latpack::lp
