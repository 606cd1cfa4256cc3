// JSON views of the library types. Series coefficients are emitted as exact
// "num/den" strings, never as decimals.
#pragma once

#include <json.hpp>

#include "latpack/dims.hpp"
#include "latpack/lattices.hpp"
#include "latpack/lpbound.hpp"
#include "latpack/qseries.hpp"
#include "latpack/quasicrystal.hpp"

namespace latpack {

inline nlohmann::json to_json(const QSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 0; i <= s.order(); ++i) coeffs.push_back(rational_to_string(s.coeff(i)));
  return {{"var_scale", s.var_scale()}, {"order", s.order()}, {"coeffs", coeffs}};
}

inline QSeries qseries_from_json(const nlohmann::json& j) {
  const int scale = j.at("var_scale").get<int>();
  const int order = j.at("order").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != order + 1)
    throw std::invalid_argument("qseries_from_json: coeffs must have order+1 entries");
  QSeries s(scale, order);
  for (int i = 0; i <= order; ++i) s.coeff_mut(i) = rational_from_string(coeffs[i].get<std::string>());
  return s;
}

inline nlohmann::json to_json(const dims::MasterRow& r) {
  return {{"d", r.d},
          {"k", r.k},
          {"dim_s_full", r.dim_s_full},
          {"dim_s_g02", r.dim_s_g02},
          {"delta", r.delta},
          {"notes",
           {{"rootless", r.rootless}, {"lp_sharp", r.lp_sharp}, {"cft", r.cft}, {"status", r.status}}}};
}

inline nlohmann::json to_json(const std::vector<dims::MasterRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

inline nlohmann::json to_json(const codes::WeightEnumerator& w) {
  nlohmann::json counts = nlohmann::json::array();
  for (auto c : w.counts) counts.push_back(c);
  return {{"n", w.n}, {"counts", counts}};
}

inline nlohmann::json to_json(const lattices::ShellCounts& s) {
  nlohmann::json counts = nlohmann::json::array();
  for (auto c : s.counts) counts.push_back(c);
  return {{"max_norm", s.max_norm}, {"counts", counts}, {"complete", s.complete}, {"nodes", s.nodes}};
}

inline nlohmann::json to_json(const lpbound::LPResult& r, double best_lattice_density) {
  return {{"d", r.f.dim},
          {"status", lp::to_string(r.status)},
          {"bound_density", r.bound_density},
          {"ratio_to_best_lattice",
           best_lattice_density > 0 ? r.bound_density / best_lattice_density : 0.0},
          {"degree", static_cast<int>(r.f.coeffs.size()) - 1},
          {"r0", r.r0},
          {"f_at_zero", r.objective},
          {"max_violation", r.max_violation},
          {"iterations", r.iterations},
          {"refine_rounds", r.refine_rounds}};
}

inline nlohmann::json to_json(const std::vector<quasi::GapLabel>& gaps) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : gaps) {
    arr.push_back({{"ids", g.ids},
                   {"width", g.width},
                   {"left_edge", g.left},
                   {"m", g.m},
                   {"label", g.label},
                   {"deviation", g.deviation}});
  }
  return arr;
}

inline nlohmann::json to_json(const quasi::SpacingHistogram& h) {
  nlohmann::json counts = nlohmann::json::array();
  for (auto c : h.counts) counts.push_back(c);
  return {{"bin_width", h.bin_width}, {"counts", counts}, {"mean", h.mean}, {"variance", h.variance}};
}

}  // namespace latpack
