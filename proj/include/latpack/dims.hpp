// Dimension formulas for spaces of modular forms and cusp forms on SL2(Z)
// and Gamma0(2), an independent graded-ring monomial count, and the master
// table over d = 8, 16, ..., 96 with its static annotation columns.
#pragma once

#include <string>
#include <vector>

namespace latpack::dims {

enum class Group { Full, Gamma02 };

// dim M_k. Full: floor(k/12)+1, minus one when k = 2 (mod 12).
// Gamma0(2): 1 + floor(k/4), stated for even k >= 4.
int dim_modular(int k, Group g);

// dim S_k = dim M_k - 1 (Full) or dim M_k - 2 (Gamma0(2)), clamped at 0.
int dim_cusp(int k, Group g);

// Independent route: count monomials in the free generators of the graded
// ring, weights (4,6) for the full group and (2,4) for Gamma0(2).
int dim_oracle(int k, Group g);

struct MasterRow {
  int d = 0;
  int k = 0;
  int dim_s_full = 0;
  int dim_s_g02 = 0;
  int delta = 0;
  // Annotation columns are static literature data keyed by d; they are
  // reproduced as-is and never computed.
  std::string rootless;
  std::string lp_sharp;
  std::string cft;
  std::string status;
};

// One row per d in {8, 16, ..., d_max}. Annotations are available for
// d <= 96; beyond that the strings are empty.
std::vector<MasterRow> master_table(int d_max);

std::string render_markdown(const std::vector<MasterRow>& rows);
std::string render_csv(const std::vector<MasterRow>& rows);

}  // namespace latpack::dims
