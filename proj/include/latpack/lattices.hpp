// Integral lattices given by an exact Gram matrix: Construction A, shell
// enumeration (Fincke-Pohst with exact re-verification), theta series, root
// counts, the Eisenstein/cusp decomposition of theta, and packing density.
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latpack/codes.hpp"
#include "latpack/qseries.hpp"

namespace latpack::lattices {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Integer basis B with gram = B * B^T / scale. Kept when a lattice is built
// from a construction rather than a raw Gram matrix; enables the exact
// coset-sum theta route for lattices with 2Z^n <= L <= Z^n.
struct BasisInfo {
  IntMatrix rows;
  int scale = 1;
};

struct Lattice {
  int rank = 0;
  IntMatrix gram;
  bool even = false;
  bool unimodular = false;
  std::optional<BasisInfo> basis;
};

// Validates symmetry and positive definiteness (exact rational LDL^T) and
// sets the even/unimodular flags from the exact Gram data.
Lattice make_lattice(IntMatrix gram);

// Exact determinant of the Gram matrix (fraction-free Bareiss elimination).
Integer gram_determinant(const IntMatrix& gram);

// {x in Z^n : x mod 2 in C} rescaled by 1/sqrt(2). The basis is the Hermite
// normal form of the stacked rows [lifted generators; 2 I_n]; the Gram is
// B B^T / 2 and must come out integral (doubly-even C). Requires a
// self-orthogonal code with n <= 32.
Lattice construction_a(const codes::BinaryCode& c);

Lattice direct_sum(const Lattice& a, const Lattice& b);

// Shipped lattices: "z<d>" (e.g. "z8"), "e8", "d16plus", "e8e8", "leech".
// Invariants (determinant, evenness, expected shell counts) are verified
// when the lattice is built.
Lattice builtin_lattice(const std::string& name);

// Whitespace-separated integers, d*d of them (row-major; line breaks free).
Lattice load_gram(const std::string& path);

struct ShellCounts {
  int max_norm = 0;
  std::vector<std::int64_t> counts;  // N_0 .. N_max_norm, indexed by squared norm
  bool complete = true;
  std::uint64_t nodes = 0;  // enumeration tree nodes visited
};

struct EnumOptions {
  std::uint64_t max_nodes = 100'000'000;
  int threads = 1;
};

// Exact vector counts per squared norm up to max_norm. Floating Cholesky
// bounds prune the search tree (relative slack 1e-6); every candidate's norm
// is recomputed in exact integer arithmetic before it is counted. When the
// node budget runs out the partial result is returned with complete=false.
ShellCounts enumerate_shells(const Lattice& l, int max_norm, const EnumOptions& opts = {});

enum class ThetaRoute { Auto, Enumerate, CosetSum };

// Theta series Theta = sum_m N_{2m} q^m of an even lattice, exact, order
// max_norm/2. Two exact routes: Fincke-Pohst enumeration, or (when the
// stored basis satisfies 2Z^n <= L <= Z^n at scale 2) a coset sum over
// L mod 2 through the theta-constant algebra. Auto prefers the coset sum
// when it is available and the enumeration would be large.
QSeries theta_series(const Lattice& l, int max_norm, ThetaRoute route = ThetaRoute::Auto,
                     const EnumOptions& opts = {});

std::int64_t root_count(const Lattice& l, const EnumOptions& opts = {});
bool is_rootless(const Lattice& l, const EnumOptions& opts = {});

// f = theta - E_{d/2}; checks a_0(f) = 0 and, when dim S_{d/2}(SL2(Z)) = 0,
// that f vanishes identically to the truncation. For d = 24 the coefficient
// of Delta is f.coeff(1).
QSeries cusp_component(const QSeries& theta, int d);

// vol(B_{lambda1/2}) / sqrt(det gram), double precision from exact inputs.
double density(const Lattice& l, const EnumOptions& opts = {});

double ball_volume(int d, double r);

// Thrown when an enumeration exceeds its node budget in a context that
// cannot use a partial result.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace latpack::lattices
