#include "latpack/dims.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace latpack::dims {

namespace {

void check_weight(int k, Group g) {
  if (k < 0 || k % 2 != 0) throw std::invalid_argument("dims: weight must be even and >= 0");
  if (g == Group::Gamma02 && k < 4)
    throw std::invalid_argument("dims: Gamma0(2) formulas are stated for k >= 4");
}

struct Annotation {
  int d;
  const char* rootless;
  const char* lp_sharp;
  const char* cft;
  const char* status;
};

constexpr std::array<Annotation, 12> kAnnotations{{
    {8, "No\xE2\x80\xA0", "Yes", "Yes", "Proved"},
    {16, "No", "No", "No", "Cohn\xE2\x80\x93Triantafillou 2021"},
    {24, "Yes (unique)", "Yes", "Yes", "Proved"},
    {32, "Yes (>10^7)", "No", "No", "Cohn\xE2\x80\x93Triantafillou 2021"},
    {40, "\xE2\x80\x94", "No", "No", "Expected"},
    {48, "\xE2\x80\x94", "No", "No", "Expected"},
    {56, "\xE2\x80\x94", "No", "No", "Expected"},
    {64, "\xE2\x80\x94", "No", "No", "Expected"},
    {72, "\xE2\x80\x94", "No", "No", "Expected"},
    {80, "\xE2\x80\x94", "No", "No", "Expected"},
    {88, "\xE2\x80\x94", "No", "No", "Expected"},
    {96, "\xE2\x80\x94", "No", "No", "Expected"},
}};

}  // namespace

int dim_modular(int k, Group g) {
  check_weight(k, g);
  if (g == Group::Full) {
    const int base = k / 12;
    return (k % 12 == 2) ? base : base + 1;
  }
  return 1 + k / 4;
}

int dim_cusp(int k, Group g) {
  check_weight(k, g);
  if (k < 4) throw std::invalid_argument("dims: cusp dimensions are defined for k >= 4");
  const int m = dim_modular(k, g);
  const int s = m - (g == Group::Full ? 1 : 2);
  return s < 0 ? 0 : s;
}

int dim_oracle(int k, Group g) {
  check_weight(k, g);
  if (k < 4) throw std::invalid_argument("dims: oracle is defined for k >= 4");
  const int wa = (g == Group::Full) ? 4 : 2;
  const int wb = (g == Group::Full) ? 6 : 4;
  int count = 0;
  for (int b = 0; wb * b <= k; ++b) {
    if ((k - wb * b) % wa == 0) ++count;
  }
  return count;
}

std::vector<MasterRow> master_table(int d_max) {
  if (d_max < 8 || d_max % 8 != 0)
    throw std::invalid_argument("master_table: d_max must be a positive multiple of 8");
  std::vector<MasterRow> rows;
  for (int d = 8; d <= d_max; d += 8) {
    MasterRow row;
    row.d = d;
    row.k = d / 2;
    row.dim_s_full = dim_cusp(row.k, Group::Full);
    row.dim_s_g02 = dim_cusp(row.k, Group::Gamma02);
    row.delta = row.dim_s_g02 - row.dim_s_full;
    for (const auto& a : kAnnotations) {
      if (a.d == d) {
        row.rootless = a.rootless;
        row.lp_sharp = a.lp_sharp;
        row.cft = a.cft;
        row.status = a.status;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_markdown(const std::vector<MasterRow>& rows) {
  std::ostringstream os;
  os << "| d | k | dim S_k(SL2(Z)) | dim S_k(Gamma0(2)) | Delta | Rootless? | LP sharp? | CFT? | Status |\n";
  os << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.d << " | " << r.k << " | " << r.dim_s_full << " | " << r.dim_s_g02 << " | " << r.delta
       << " | " << r.rootless << " | " << r.lp_sharp << " | " << r.cft << " | " << r.status << " |\n";
  }
  return os.str();
}

std::string render_csv(const std::vector<MasterRow>& rows) {
  std::ostringstream os;
  os << "d,k,dim_s_full,dim_s_g02,delta,rootless,lp_sharp,cft,status\n";
  for (const auto& r : rows) {
    os << r.d << ',' << r.k << ',' << r.dim_s_full << ',' << r.dim_s_g02 << ',' << r.delta << ",\""
       << r.rootless << "\",\"" << r.lp_sharp << "\",\"" << r.cft << "\",\"" << r.status << "\"\n";
  }
  return os.str();
}

}  // namespace latpack::dims
