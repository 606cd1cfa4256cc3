#include "latpack/lattices.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "latpack/dims.hpp"

namespace latpack::lattices {

namespace {

using BigMatrix = std::vector<std::vector<Integer>>;

// Fraction-free Bareiss elimination; exact determinant.
Integer bareiss_determinant(BigMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Positive definiteness by exact LDL^T pivots.
bool is_positive_definite_exact(const IntMatrix& g) {
  const int n = static_cast<int>(g.rows());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(g(i, j));
  for (int k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

// Row-style Hermite normal form. Returns the nonzero rows: upper triangular
// in column order, positive pivots, entries above a pivot reduced into
// [0, pivot).
BigMatrix hermite_normal_form(BigMatrix rows, int n) {
  const int m = static_cast<int>(rows.size());
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    // Euclid on the column entries below the current rank.
    while (true) {
      int best = -1;
      for (int r = rank; r < m; ++r) {
        if (rows[r][col] != 0 && (best < 0 || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
      }
      if (best < 0) break;
      std::swap(rows[rank], rows[best]);
      bool others = false;
      for (int r = rank + 1; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        const Integer q = rows[r][col] / rows[rank][col];
        if (q != 0)
          for (int j = 0; j < n; ++j) rows[r][j] -= q * rows[rank][j];
        if (rows[r][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[rank][col] == 0) continue;
    if (rows[rank][col] < 0)
      for (int j = 0; j < n; ++j) rows[rank][j] = -rows[rank][j];
    for (int r = 0; r < rank; ++r) {
      Integer q = rows[r][col] / rows[rank][col];
      if (rows[r][col] - q * rows[rank][col] < 0) q -= 1;  // floor division
      if (q != 0)
        for (int j = 0; j < n; ++j) rows[r][j] -= q * rows[rank][j];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

IntMatrix to_int64(const BigMatrix& m) {
  const int r = static_cast<int>(m.size());
  const int c = r == 0 ? 0 : static_cast<int>(m[0].size());
  IntMatrix out(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      if (m[i][j] > std::numeric_limits<std::int64_t>::max() ||
          m[i][j] < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("lattice basis entry exceeds 64 bits");
      out(i, j) = m[i][j].convert_to<std::int64_t>();
    }
  return out;
}

// ---- Fincke-Pohst enumeration ----------------------------------------------

struct EnumShared {
  const IntMatrix* gram;
  Eigen::MatrixXd chol_u;  // gram = U^T U
  int n;
  std::int64_t max_norm;
  double fp_bound;
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t max_nodes;
  std::atomic<bool> aborted{false};
};

struct EnumWorker {
  EnumShared* sh;
  std::vector<std::int64_t> counts;
  std::vector<double> row_sum_f;       // sum_{j>r} U(r,j) x_j
  std::vector<std::int64_t> row_sum_i; // sum_{j>r} G(r,j) x_j
  std::uint64_t local_nodes = 0;

  explicit EnumWorker(EnumShared* shared)
      : sh(shared),
        counts(static_cast<size_t>(shared->max_norm) + 1, 0),
        row_sum_f(shared->n, 0.0),
        row_sum_i(shared->n, 0) {}

  bool tick() {
    if (++local_nodes % 4096 == 0) {
      if (sh->nodes.fetch_add(4096, std::memory_order_relaxed) + 4096 > sh->max_nodes) {
        sh->aborted.store(true, std::memory_order_relaxed);
      }
    }
    return !sh->aborted.load(std::memory_order_relaxed);
  }

  void assign(int level, std::int64_t x) {
    for (int r = 0; r < level; ++r) {
      row_sum_f[r] += sh->chol_u(r, level) * static_cast<double>(x);
      row_sum_i[r] += (*sh->gram)(r, level) * x;
    }
  }
  void unassign(int level, std::int64_t x) {
    for (int r = 0; r < level; ++r) {
      row_sum_f[r] -= sh->chol_u(r, level) * static_cast<double>(x);
      row_sum_i[r] -= (*sh->gram)(r, level) * x;
    }
  }

  void range_at(int level, double fp_partial, bool all_zero, std::int64_t& lo, std::int64_t& hi) const {
    const double diag = sh->chol_u(level, level);
    const double rem = sh->fp_bound - fp_partial;
    if (rem < 0) {
      lo = 1;
      hi = 0;
      return;
    }
    const double width = std::sqrt(rem) / diag;
    const double center = -row_sum_f[level] / diag;
    lo = static_cast<std::int64_t>(std::ceil(center - width - 1e-9));
    hi = static_cast<std::int64_t>(std::floor(center + width + 1e-9));
    if (all_zero && lo < 0) lo = 0;
  }

  // Levels run from n-1 down to 0; all_zero tracks whether every coordinate
  // assigned so far is zero (used to enumerate only one of each +/- pair).
  void descend(int level, double fp_partial, std::int64_t int_partial, bool all_zero) {
    std::int64_t lo, hi;
    range_at(level, fp_partial, all_zero, lo, hi);
    const double diag = sh->chol_u(level, level);
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (!tick()) return;
      const double val = diag * static_cast<double>(x) + row_sum_f[level];
      const double fp_next = fp_partial + val * val;
      if (fp_next > sh->fp_bound) continue;
      // Exact squared norm of the suffix vector; a lower bound for any
      // completion, so it prunes exactly.
      const std::int64_t int_next =
          int_partial + x * ((*sh->gram)(level, level) * x + 2 * row_sum_i[level]);
      if (int_next > sh->max_norm) continue;
      const bool zero_now = all_zero && x == 0;
      if (level == 0) {
        counts[static_cast<size_t>(int_next)] += zero_now ? 1 : 2;
      } else {
        assign(level, x);
        descend(level - 1, fp_next, int_next, zero_now);
        unassign(level, x);
      }
    }
  }

  // Top-level split for threading: handle only x-values with
  // index % stride == offset.
  void run_top(int offset, int stride) {
    const int top = sh->n - 1;
    if (top == 0) {
      if (offset == 0) descend(0, 0.0, 0, true);
      return;
    }
    std::int64_t lo, hi;
    range_at(top, 0.0, true, lo, hi);
    const double diag = sh->chol_u(top, top);
    int index = 0;
    for (std::int64_t x = lo; x <= hi; ++x, ++index) {
      if (index % stride != offset) continue;
      if (!tick()) return;
      const double val = diag * static_cast<double>(x);
      const double fp_next = val * val;
      if (fp_next > sh->fp_bound) continue;
      const std::int64_t int_next = x * (*sh->gram)(top, top) * x;
      if (int_next > sh->max_norm) continue;
      const bool zero_now = x == 0;
      assign(top, x);
      descend(top - 1, fp_next, int_next, zero_now);
      unassign(top, x);
    }
  }
};

// ---- coset-sum theta route --------------------------------------------------

bool basis_is_upper_triangular(const IntMatrix& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (b(i, j) != 0) return false;
  return true;
}

// Does the (upper triangular, positive diagonal) basis span contain 2 Z^n?
bool contains_two_zn(const IntMatrix& b) {
  const int n = static_cast<int>(b.cols());
  for (int j = 0; j < n; ++j) {
    std::vector<std::int64_t> w(n, 0);
    w[j] = 2;
    for (int i = 0; i < n; ++i) {
      if (w[i] == 0) continue;
      if (b(i, i) == 0 || w[i] % b(i, i) != 0) return false;
      const std::int64_t q = w[i] / b(i, i);
      for (int c = i; c < n; ++c) w[c] -= q * b(i, c);
    }
    for (int c = 0; c < n; ++c)
      if (w[c] != 0) return false;
  }
  return true;
}

std::optional<codes::BinaryCode> code_from_basis_mod2(const BasisInfo& basis) {
  if (basis.scale != 2) return std::nullopt;
  const IntMatrix& b = basis.rows;
  if (b.rows() != b.cols()) return std::nullopt;
  if (!basis_is_upper_triangular(b) || !contains_two_zn(b)) return std::nullopt;
  const int n = static_cast<int>(b.cols());
  if (n > 64) return std::nullopt;
  std::vector<std::uint64_t> rows;
  for (int i = 0; i < n; ++i) {
    std::uint64_t r = 0;
    for (int j = 0; j < n; ++j)
      if (((b(i, j) % 2) + 2) % 2 == 1) r |= 1ull << j;
    if (r != 0) rows.push_back(r);
  }
  if (rows.empty()) {
    // L = 2Z^n: the trivial [n, 0] code. Represent with an empty-weight
    // enumerator downstream; make_code cannot hold k = 0, so signal with a
    // one-row marker handled by the caller.
    return std::nullopt;
  }
  // Reduce to an independent generating set before handing to make_code.
  std::vector<std::uint64_t> reduced;
  for (auto row : rows) {
    for (auto pivot : reduced) {
      const int bit = std::countr_zero(pivot);
      if (row & (1ull << bit)) row ^= pivot;
    }
    if (row != 0) reduced.push_back(row);
  }
  if (reduced.empty()) return std::nullopt;
  return codes::make_code(std::move(reduced), n);
}

void verify_shells(const Lattice& l, int max_norm, const std::vector<std::pair<int, std::int64_t>>& expected,
                   const std::string& name) {
  const ShellCounts sc = enumerate_shells(l, max_norm);
  if (!sc.complete) throw BudgetExceeded("builtin_lattice: verification enumeration exceeded its budget");
  for (const auto& [norm, count] : expected) {
    if (sc.counts[static_cast<size_t>(norm)] != count) {
      throw std::logic_error("builtin_lattice: " + name + " failed shell check N_" + std::to_string(norm) +
                             " = " + std::to_string(sc.counts[static_cast<size_t>(norm)]) + ", expected " +
                             std::to_string(count));
    }
  }
}

Lattice with_basis(Lattice l, IntMatrix rows, int scale) {
  l.basis = BasisInfo{std::move(rows), scale};
  return l;
}

}  // namespace

Integer gram_determinant(const IntMatrix& gram) {
  const int n = static_cast<int>(gram.rows());
  BigMatrix m(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = gram(i, j);
  return bareiss_determinant(std::move(m));
}

Lattice make_lattice(IntMatrix gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0)
    throw std::invalid_argument("make_lattice: Gram matrix must be square and nonempty");
  if (!gram.isApprox(gram.transpose()))
    throw std::invalid_argument("make_lattice: Gram matrix must be symmetric");
  if (!is_positive_definite_exact(gram))
    throw std::invalid_argument("make_lattice: Gram matrix is not positive definite");
  Lattice l;
  l.rank = static_cast<int>(gram.rows());
  l.even = true;
  for (int i = 0; i < l.rank; ++i)
    if (gram(i, i) % 2 != 0) l.even = false;
  l.unimodular = (gram_determinant(gram) == 1);
  l.gram = std::move(gram);
  return l;
}

Lattice construction_a(const codes::BinaryCode& c) {
  if (c.n > 32) throw std::invalid_argument("construction_a: code length above the n <= 32 guard");
  for (int i = 0; i < c.k; ++i)
    for (int j = i; j < c.k; ++j)
      if (std::popcount(c.rows[i] & c.rows[j]) % 2 != 0)
        throw std::invalid_argument("construction_a: code is not self-orthogonal");

  BigMatrix stack;
  for (int i = 0; i < c.k; ++i) {
    std::vector<Integer> row(c.n);
    for (int j = 0; j < c.n; ++j) row[j] = (c.rows[i] >> j) & 1u;
    stack.push_back(std::move(row));
  }
  for (int j = 0; j < c.n; ++j) {
    std::vector<Integer> row(c.n, 0);
    row[j] = 2;
    stack.push_back(std::move(row));
  }
  BigMatrix hnf = hermite_normal_form(std::move(stack), c.n);
  if (static_cast<int>(hnf.size()) != c.n)
    throw std::logic_error("construction_a: basis rank mismatch after HNF");
  const IntMatrix basis = to_int64(hnf);

  IntMatrix gram2 = basis * basis.transpose();
  IntMatrix gram(c.n, c.n);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) {
      if (gram2(i, j) % 2 != 0)
        throw std::domain_error("construction_a: Gram is not integral after scaling; code is not doubly even");
      gram(i, j) = gram2(i, j) / 2;
    }
  return with_basis(make_lattice(std::move(gram)), basis, 2);
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const int n = a.rank + b.rank;
  IntMatrix gram = IntMatrix::Zero(n, n);
  gram.topLeftCorner(a.rank, a.rank) = a.gram;
  gram.bottomRightCorner(b.rank, b.rank) = b.gram;
  Lattice l = make_lattice(std::move(gram));
  if (a.basis && b.basis && a.basis->scale == b.basis->scale) {
    IntMatrix rows = IntMatrix::Zero(n, n);
    rows.topLeftCorner(a.rank, a.rank) = a.basis->rows;
    rows.bottomRightCorner(b.rank, b.rank) = b.basis->rows;
    l.basis = BasisInfo{std::move(rows), a.basis->scale};
  }
  return l;
}

Lattice builtin_lattice(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'z') {
    const int d = std::stoi(name.substr(1));
    if (d < 1 || d > 48) throw std::invalid_argument("builtin_lattice: z<d> supports 1 <= d <= 48");
    Lattice l = make_lattice(IntMatrix::Identity(d, d));
    return with_basis(std::move(l), IntMatrix::Identity(d, d), 1);
  }
  if (name == "e8") {
    static const Lattice cached = [] {
      Lattice l = construction_a(codes::builtin_code("hamming8"));
      verify_shells(l, 2, {{2, 240}}, "e8");
      if (!l.even || !l.unimodular) throw std::logic_error("builtin_lattice: e8 flags wrong");
      return l;
    }();
    return cached;
  }
  if (name == "d16plus") {
    static const Lattice cached = [] {
      Lattice l = construction_a(codes::builtin_code("d16plus"));
      verify_shells(l, 2, {{2, 480}}, "d16plus");
      if (!l.even || !l.unimodular) throw std::logic_error("builtin_lattice: d16plus flags wrong");
      return l;
    }();
    return cached;
  }
  if (name == "e8e8") {
    static const Lattice cached = [] {
      const Lattice e8 = builtin_lattice("e8");
      Lattice l = direct_sum(e8, e8);
      verify_shells(l, 2, {{2, 480}}, "e8e8");
      return l;
    }();
    return cached;
  }
  if (name == "leech") {
    static const Lattice cached = [] {
      // Spanning set over the Golay code: 2*lift(g), 4(e_i + e_23), 8 e_23,
      // and the odd-class glue vector (-3, 1, ..., 1). Scale is 8.
      const codes::BinaryCode golay = codes::builtin_code("golay24");
      BigMatrix stack;
      for (int i = 0; i < golay.k; ++i) {
        std::vector<Integer> row(24);
        for (int j = 0; j < 24; ++j) row[j] = 2 * ((golay.rows[i] >> j) & 1u);
        stack.push_back(std::move(row));
      }
      for (int i = 0; i < 23; ++i) {
        std::vector<Integer> row(24, 0);
        row[i] = 4;
        row[23] = 4;
        stack.push_back(std::move(row));
      }
      std::vector<Integer> last(24, 0);
      last[23] = 8;
      stack.push_back(std::move(last));
      std::vector<Integer> glue(24, 1);
      glue[0] = -3;
      stack.push_back(std::move(glue));

      BigMatrix hnf = hermite_normal_form(std::move(stack), 24);
      if (hnf.size() != 24) throw std::logic_error("builtin_lattice: leech basis rank mismatch");
      const IntMatrix basis = to_int64(hnf);
      IntMatrix gram8 = basis * basis.transpose();
      IntMatrix gram(24, 24);
      for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) {
          if (gram8(i, j) % 8 != 0) throw std::logic_error("builtin_lattice: leech Gram not divisible by 8");
          gram(i, j) = gram8(i, j) / 8;
        }
      Lattice l = with_basis(make_lattice(std::move(gram)), basis, 8);
      // The shipped construction is never trusted: determinant 1, evenness,
      // no roots, and the norm-4 shell count are all re-verified here.
      if (!l.even || !l.unimodular) throw std::logic_error("builtin_lattice: leech flags wrong");
      verify_shells(l, 4, {{2, 0}, {4, 196560}}, "leech");
      return l;
    }();
    return cached;
  }
  throw std::invalid_argument("builtin_lattice: unknown lattice '" + name + "'");
}

Lattice load_gram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_gram: cannot open '" + path + "'");
  std::vector<std::int64_t> vals;
  std::int64_t v;
  while (in >> v) vals.push_back(v);
  const auto d = static_cast<int>(std::llround(std::sqrt(static_cast<double>(vals.size()))));
  if (vals.empty() || static_cast<size_t>(d) * d != vals.size())
    throw std::runtime_error("load_gram: expected d*d whitespace-separated integers");
  IntMatrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram(i, j) = vals[static_cast<size_t>(i) * d + j];
  return make_lattice(std::move(gram));
}

ShellCounts enumerate_shells(const Lattice& l, int max_norm, const EnumOptions& opts) {
  if (max_norm < 2 || max_norm % 2 != 0)
    throw std::invalid_argument("enumerate_shells: max_norm must be an even integer >= 2");

  EnumShared sh;
  sh.gram = &l.gram;
  sh.n = l.rank;
  sh.max_norm = max_norm;
  sh.fp_bound = static_cast<double>(max_norm) * (1.0 + 1e-6) + 1e-9;
  sh.max_nodes = opts.max_nodes;

  Eigen::LLT<Eigen::MatrixXd> llt(l.gram.cast<double>());
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("enumerate_shells: Cholesky failed (Gram not positive definite?)");
  sh.chol_u = llt.matrixU();

  const int threads = std::max(1, std::min(opts.threads, 16));
  std::vector<EnumWorker> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) workers.emplace_back(&sh);

  if (threads == 1) {
    workers[0].run_top(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] { workers[t].run_top(t, threads); });
    for (auto& th : pool) th.join();
  }

  ShellCounts out;
  out.max_norm = max_norm;
  out.counts.assign(static_cast<size_t>(max_norm) + 1, 0);
  std::uint64_t residual = 0;
  for (const auto& w : workers) {
    for (size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += w.counts[i];
    residual += w.local_nodes % 4096;
  }
  out.nodes = sh.nodes.load() + residual;
  out.complete = !sh.aborted.load();
  return out;
}

QSeries theta_series(const Lattice& l, int max_norm, ThetaRoute route, const EnumOptions& opts) {
  if (!l.even) throw std::invalid_argument("theta_series: lattice must be even");
  if (max_norm < 2 || max_norm % 2 != 0)
    throw std::invalid_argument("theta_series: max_norm must be an even integer >= 2");

  std::optional<codes::BinaryCode> coset_code;
  if (route != ThetaRoute::Enumerate && l.basis) coset_code = code_from_basis_mod2(*l.basis);
  if (route == ThetaRoute::CosetSum && !coset_code)
    throw std::invalid_argument("theta_series: coset-sum route needs a scale-2 basis with 2Z^n <= L");

  QSeries theta(1, max_norm / 2);
  if (coset_code) {
    const codes::WeightEnumerator w = codes::weight_enumerator(*coset_code);
    theta = codes::gleason_substitution(w, max_norm / 2);
  } else {
    const ShellCounts sc = enumerate_shells(l, max_norm, opts);
    if (!sc.complete)
      throw BudgetExceeded("theta_series: enumeration exceeded the node budget (" +
                           std::to_string(opts.max_nodes) + " nodes)");
    for (int m = 0; m <= max_norm / 2; ++m) theta.coeff_mut(m) = Rational(Integer(sc.counts[2 * m]));
  }
  if (l.unimodular) theta.set_weight(l.rank / 2);
  return theta;
}

std::int64_t root_count(const Lattice& l, const EnumOptions& opts) {
  if (!l.even) throw std::invalid_argument("root_count: lattice must be even");
  const ShellCounts sc = enumerate_shells(l, 2, opts);
  if (!sc.complete) throw BudgetExceeded("root_count: enumeration exceeded the node budget");
  return sc.counts[2];
}

bool is_rootless(const Lattice& l, const EnumOptions& opts) { return root_count(l, opts) == 0; }

QSeries cusp_component(const QSeries& theta, int d) {
  if (d < 8 || d % 8 != 0) throw std::invalid_argument("cusp_component: d must be a positive multiple of 8");
  if (theta.var_scale() != 1) throw std::invalid_argument("cusp_component: theta must be a q-series");
  if (theta.order() < 2) throw std::invalid_argument("cusp_component: truncation order must be >= 2");
  const QSeries e = eisenstein_series(d / 2, theta.order());
  QSeries f = theta - e;
  if (f.coeff(0) != 0)
    throw std::domain_error("cusp_component: nonzero constant term; input is not the theta series of an "
                            "even unimodular lattice in this normalization");
  if (dims::dim_cusp(d / 2, dims::Group::Full) == 0 && !f.is_zero())
    throw std::domain_error("cusp_component: nonzero cusp part in a weight with dim S = 0");
  f.set_weight(d / 2);
  return f;
}

double ball_volume(int d, double r) {
  return std::pow(M_PI, d / 2.0) * std::pow(r, d) / std::tgamma(d / 2.0 + 1.0);
}

double density(const Lattice& l, const EnumOptions& opts) {
  int min_norm = 0;
  for (int cap = 2; cap <= 64 && min_norm == 0; cap *= 2) {
    const ShellCounts sc = enumerate_shells(l, cap, opts);
    if (!sc.complete) throw BudgetExceeded("density: enumeration exceeded the node budget");
    for (int m = 1; m <= cap; ++m) {
      if (sc.counts[static_cast<size_t>(m)] > 0) {
        min_norm = m;
        break;
      }
    }
  }
  if (min_norm == 0) throw std::logic_error("density: no vector of norm <= 64 found");
  const double det = gram_determinant(l.gram).convert_to<double>();
  return ball_volume(l.rank, std::sqrt(static_cast<double>(min_norm)) / 2.0) / std::sqrt(det);
}

}  // namespace latpack::lattices
