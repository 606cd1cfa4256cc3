#include "latpack/quasicrystal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latpack::quasi {

FibWord fibonacci_word(int k) {
  if (k < 1 || k > 30) throw std::invalid_argument("fibonacci_word: k must be in [1, 30]");
  if (k == 1) return {1, "b"};
  std::string w = "a";
  for (int step = 2; step < k; ++step) {
    std::string next;
    next.reserve(w.size() * 2);
    for (char ch : w) {
      if (ch == 'a') next += "ab";
      else next += 'a';
    }
    w = std::move(next);
  }
  return {k, std::move(w)};
}

Tridiagonal fib_hamiltonian(const FibWord& w, double lambda) {
  const int n = static_cast<int>(w.letters.size());
  Tridiagonal t;
  t.diag.resize(n);
  for (int i = 0; i < n; ++i) t.diag[i] = (w.letters[static_cast<size_t>(i)] == 'a') ? lambda : 0.0;
  t.off = Eigen::VectorXd::Ones(std::max(0, n - 1));
  return t;
}

namespace {

struct Sturm {
  const Eigen::VectorXd& d;
  Eigen::VectorXd e2;  // squared off-diagonals
  double pivmin;

  explicit Sturm(const Tridiagonal& t) : d(t.diag) {
    e2 = t.off.array().square();
    const double emax = e2.size() > 0 ? e2.maxCoeff() : 1.0;
    pivmin = std::max(emax, 1.0) * 1e-290;
  }

  // Number of eigenvalues strictly below x.
  int count_below(double x) const {
    int count = 0;
    double q = d[0] - x;
    if (q < 0) ++count;
    for (Eigen::Index i = 1; i < d.size(); ++i) {
      if (std::abs(q) < pivmin) q = (q < 0) ? -pivmin : pivmin;
      q = d[i] - x - e2[i - 1] / q;
      if (q < 0) ++count;
    }
    return count;
  }
};

// Isolate-and-refine bisection: split intervals until each either contains a
// cluster narrower than tol or a single eigenvalue refined to tol.
void refine_interval(const Sturm& s, double lo, double hi, int klo, int khi, double tol,
                     Eigen::VectorXd& out) {
  if (khi <= klo) return;
  if (hi - lo < tol) {
    const double mid = 0.5 * (lo + hi);
    for (int k = klo; k < khi; ++k) out[k] = mid;
    return;
  }
  const double mid = 0.5 * (lo + hi);
  const int km = std::clamp(s.count_below(mid), klo, khi);
  refine_interval(s, lo, mid, klo, km, tol, out);
  refine_interval(s, mid, hi, km, khi, tol, out);
}

}  // namespace

Eigen::VectorXd tridiag_eigenvalues(const Tridiagonal& t, double tol) {
  const int n = static_cast<int>(t.diag.size());
  if (n < 1) throw std::invalid_argument("tridiag_eigenvalues: empty operator");
  if (n > 20000) throw std::invalid_argument("tridiag_eigenvalues: N capped at 20000");
  if (t.off.size() != n - 1) throw std::invalid_argument("tridiag_eigenvalues: off-diagonal size mismatch");
  for (Eigen::Index i = 0; i < t.off.size(); ++i)
    if (!(t.off[i] > 0)) throw std::invalid_argument("tridiag_eigenvalues: off-diagonals must be positive");
  if (!(tol > 0)) throw std::invalid_argument("tridiag_eigenvalues: tolerance must be positive");

  // Gershgorin bounds bracket the whole spectrum.
  double lo = t.diag[0], hi = t.diag[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off[i - 1]);
    if (i < n - 1) r += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double pad = 1e-8 * (1.0 + std::abs(lo) + std::abs(hi));
  lo -= pad;
  hi += pad;

  Sturm s(t);
  Eigen::VectorXd eigs(n);
  const double eff_tol = std::max(tol * 0.5, 4.0 * std::numeric_limits<double>::epsilon() *
                                                 std::max(std::abs(lo), std::abs(hi)));
  refine_interval(s, lo, hi, 0, n, eff_tol, eigs);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

std::vector<GapLabel> gap_labels(const Eigen::VectorXd& eigs, double gap_threshold) {
  const int n = static_cast<int>(eigs.size());
  if (n < 2) return {};
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;

  std::vector<GapLabel> gaps;
  for (int i = 0; i + 1 < n; ++i) {
    const double width = eigs[i + 1] - eigs[i];
    if (width <= gap_threshold) continue;
    GapLabel g;
    g.ids = static_cast<double>(i + 1) / n;
    g.width = width;
    g.left = eigs[i];
    g.deviation = 2.0;
    // Gap labels live in Z + Z/phi mod 1; scan m = -10..10 (m = 0 excluded,
    // no gap sits at IDS 0 or 1).
    for (int m = -10; m <= 10; ++m) {
      if (m == 0) continue;
      double frac = std::fmod(m / phi, 1.0);
      if (frac < 0) frac += 1.0;
      const double dev = std::abs(g.ids - frac);
      if (dev < g.deviation) {
        g.deviation = dev;
        g.label = frac;
        g.m = m;
      }
    }
    gaps.push_back(g);
  }
  std::sort(gaps.begin(), gaps.end(), [](const GapLabel& a, const GapLabel& b) { return a.width > b.width; });
  return gaps;
}

SpacingHistogram spacing_histogram(const Eigen::VectorXd& eigs, int bins) {
  const int n = static_cast<int>(eigs.size());
  if (n < 100) throw std::invalid_argument("spacing_histogram: need at least 100 eigenvalues");
  if (bins < 1) throw std::invalid_argument("spacing_histogram: need at least one bin");

  const int ns = n - 1;
  const int window = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  SpacingHistogram h;
  h.spacings.resize(static_cast<size_t>(ns));
  for (int i = 0; i < ns; ++i) {
    const int lo = std::max(0, i - window);
    const int hi = std::min(ns - 1, i + window);
    const double local_mean = (eigs[hi + 1] - eigs[lo]) / (hi - lo + 1);
    h.spacings[static_cast<size_t>(i)] =
        local_mean > 0 ? (eigs[i + 1] - eigs[i]) / local_mean : 0.0;
  }
  double mean = 0.0;
  for (double s : h.spacings) mean += s;
  mean /= ns;
  for (double& s : h.spacings) s /= mean;

  double m1 = 0.0, m2 = 0.0, smax = 0.0;
  for (double s : h.spacings) {
    m1 += s;
    m2 += s * s;
    smax = std::max(smax, s);
  }
  h.mean = m1 / ns;
  h.variance = m2 / ns - h.mean * h.mean;

  h.bin_width = (smax > 0 ? smax : 1.0) / bins * (1.0 + 1e-12);
  h.counts.assign(static_cast<size_t>(bins), 0);
  for (double s : h.spacings) {
    int b = static_cast<int>(s / h.bin_width);
    if (b >= bins) b = bins - 1;
    ++h.counts[static_cast<size_t>(b)];
  }
  return h;
}

}  // namespace latpack::quasi
