// Fibonacci substitution Hamiltonian: substitution words, symmetric
// tridiagonal operators, full spectra by Sturm-sequence bisection, gap
// labeling against the fractional parts of m/phi, and unfolded level-spacing
// histograms.
#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace latpack::quasi {

struct FibWord {
  int order = 0;
  std::string letters;  // over {a, b}, length F_order
};

// Substitution a -> ab, b -> a. Lengths follow F_1 = F_2 = 1.
FibWord fibonacci_word(int k);

struct Tridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;  // size N-1, all strictly positive
};

// Diagonal potential lambda * [letter == 'a'], unit hopping, Dirichlet ends.
Tridiagonal fib_hamiltonian(const FibWord& w, double lambda);

// All N eigenvalues, ascending, to absolute tolerance tol. N <= 20000.
Eigen::VectorXd tridiag_eigenvalues(const Tridiagonal& t, double tol);

struct GapLabel {
  double ids = 0.0;        // integrated density of states at the gap
  double width = 0.0;      // spacing that opened the gap
  double left = 0.0;       // spectrum value at the lower gap edge
  int m = 0;               // label with the nearest frac(m/phi), |m| <= 10
  double label = 0.0;      // frac(m/phi)
  double deviation = 0.0;  // |ids - label|
};

// Gaps are spacings above the threshold; sorted by width, widest first.
std::vector<GapLabel> gap_labels(const Eigen::VectorXd& eigs, double gap_threshold);

struct SpacingHistogram {
  std::vector<double> spacings;  // unfolded, mean 1
  std::vector<std::int64_t> counts;
  double bin_width = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

// Rank-based unfolding: each spacing is divided by the local mean spacing in
// a window of ceil(sqrt(N)) levels, then globally normalized to mean 1.
SpacingHistogram spacing_histogram(const Eigen::VectorXd& eigs, int bins);

}  // namespace latpack::quasi
