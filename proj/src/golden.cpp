#include <functional>
#include <map>
#include <set>

#include "fano216/autgroup.hpp"
#include "fano216/certificate.hpp"
#include "fano216/coxcone.hpp"
#include "fano216/flagdelta.hpp"
#include "fano216/models.hpp"
#include "fano216/parallel.hpp"
#include "fano216/quartic.hpp"
#include "fano216/surface.hpp"

namespace fano216 {

const std::vector<GoldenEntry>& golden_table() {
  static const std::vector<GoldenEntry> table = {
      {"sxs.S_X(S)", "13/22", "fiber-pullback surface"},
      {"sxs.beta(S)", "9/22", "fiber-pullback surface"},
      {"sxs.tau", "2", "fiber-pullback surface"},
      {"quotient_bounds.middle_smooth", "13/16", "quotient estimate case"},
      {"quotient_bounds.middle_reducible", "19/22", "quotient estimate case"},
      {"quotient_bounds.tail", "9/88", "quotient estimate case"},
      {"quotient_bounds.gamma_term", "1/22", "quotient estimate case"},
      {"quotient_bounds.gamma_smooth_offE", "176/161", "quotient estimate case"},
      {"quotient_bounds.gamma_smooth_onE", "176/169", "quotient estimate case"},
      {"quotient_bounds.gamma_reducible_offE", "88/85", "quotient estimate case"},
      {"quotient_bounds.gamma_reducible_onE", "88/89", "quotient estimate case"},
      {"reducible_fiber.t_at_half", "2", "threshold function"},
      {"reducible_fiber.t_at_3half", "3/4", "threshold function"},
      {"reducible_fiber.S(W;L1)", "161/176", "reducible fiber case"},
      {"reducible_fiber.base", "69/88", "reducible fiber case"},
      {"reducible_fiber.F_P_generic", "0", "reducible fiber case"},
      {"reducible_fiber.F_P_L2", "3/16", "reducible fiber case"},
      {"reducible_fiber.F_P_e", "5/176", "reducible fiber case"},
      {"reducible_fiber.F_P_Gamma", "1/22", "reducible fiber case"},
      {"reducible_fiber.F_P_Gamma_L2", "41/176", "reducible fiber case"},
      {"reducible_fiber.F_P_Gamma_e", "13/176", "reducible fiber case"},
      {"reducible_fiber.S(W;G)", "85/44", "reducible fiber case"},
      {"reducible_fiber.O_base", "37/88", "reducible fiber case"},
      {"reducible_fiber.F_O_L1", "87/176", "reducible fiber case"},
      {"reducible_fiber.F_O_Gamma", "9/88", "reducible fiber case"},
      {"reducible_fiber.S(W;O_Gamma)", "23/44", "reducible fiber case (printed total is inconsistent)"},
      {"reducible_fiber.bound", "176/171", "reducible fiber case"},
      {"iskovskikh.S(W;C)", "19/22", "iskovskikh case"},
      {"iskovskikh.S(W;P)", "8/11", "iskovskikh case"},
      {"iskovskikh.bound", "22/19", "iskovskikh case"},
      {"nonreduced_fiber.S(W;L)", "31/22", "nonreduced fiber case"},
      {"volume.bl2p2_sigma_p", "2", "volume chamber table"},
      {"volume.bl2p2_sigma_q1", "5", "volume chamber table"},
      {"cox.appendixB_mu1", "1/3", "cone decomposition example"},
      {"cox.appendixB_wP", "(5/3, 5)", "cone decomposition example"},
      {"quartic.det_constant", "-2", "discriminant identity"},
      {"aut.types", "A4,C10,C2,C2^2,C2^2:C4,C2^2xC4,C2^3,C2xA4,C3,C5,C6,D4", "classification table"},
  };
  return table;
}

namespace {

using ValueMap = std::map<std::string, std::string>;

ValueMap group_threefold(const std::string& data_dir) {
  ValueMap v;
  DeltaReport r = delta_bound("sxs", data_dir);
  v["sxs.S_X(S)"] = r.value("S_X(S)").str();
  v["sxs.beta(S)"] = r.value("beta(S)").str();
  v["sxs.tau"] = r.value("tau").str();
  r = delta_bound("quotient_smooth_offE", data_dir);
  v["quotient_bounds.middle_smooth"] = r.value("middle_term").str();
  v["quotient_bounds.tail"] = r.value("tail_term").str();
  v["quotient_bounds.gamma_smooth_offE"] = r.value("gamma").str();
  r = delta_bound("quotient_smooth_onE", data_dir);
  v["quotient_bounds.gamma_term"] = r.value("gamma_term").str();
  v["quotient_bounds.gamma_smooth_onE"] = r.value("gamma").str();
  r = delta_bound("quotient_reducible_offE", data_dir);
  v["quotient_bounds.middle_reducible"] = r.value("middle_term").str();
  v["quotient_bounds.gamma_reducible_offE"] = r.value("gamma").str();
  r = delta_bound("quotient_reducible_onE", data_dir);
  v["quotient_bounds.gamma_reducible_onE"] = r.value("gamma").str();
  return v;
}

ValueMap group_reducible_fiber(const std::string& data_dir) {
  ValueMap v;
  FlagCaseData data = load_flag_case(data_dir, "reducible_fiber");
  v["reducible_fiber.t_at_half"] = pseff_threshold_2d(data.config, Rational(1, 2)).str();
  v["reducible_fiber.t_at_3half"] = pseff_threshold_2d(data.config, Rational(3, 2)).str();
  DeltaReport r = delta_bound("reducible_fiber", data_dir);
  v["reducible_fiber.S(W;L1)"] = r.value("S(W;L1)").str();
  v["reducible_fiber.base"] = r.value("S(W;P_generic) base").str();
  v["reducible_fiber.F_P_generic"] = r.value("F_P_generic").str();
  v["reducible_fiber.F_P_L2"] = r.value("F_P_L2").str();
  v["reducible_fiber.F_P_e"] = r.value("F_P_e").str();
  v["reducible_fiber.F_P_Gamma"] = r.value("F_P_Gamma").str();
  v["reducible_fiber.F_P_Gamma_L2"] = r.value("F_P_Gamma_L2").str();
  v["reducible_fiber.F_P_Gamma_e"] = r.value("F_P_Gamma_e").str();
  v["reducible_fiber.S(W;G)"] = r.value("S(W;G)").str();
  v["reducible_fiber.O_base"] = r.value("S(W;O_generic) base").str();
  v["reducible_fiber.F_O_L1"] = r.value("F_O_L1").str();
  v["reducible_fiber.F_O_Gamma"] = r.value("F_O_Gamma").str();
  v["reducible_fiber.S(W;O_Gamma)"] = r.value("S(W;O_Gamma)").str();
  v["reducible_fiber.bound"] = r.bound.str();
  return v;
}

ValueMap group_other_flags(const std::string& data_dir) {
  ValueMap v;
  DeltaReport r = delta_bound("iskovskikh", data_dir);
  v["iskovskikh.S(W;C)"] = r.value("S(W;C)").str();
  v["iskovskikh.S(W;P)"] = r.value("S(W;P_generic)").str();
  v["iskovskikh.bound"] = r.bound.str();
  r = delta_bound("nonreduced_fiber", data_dir);
  v["nonreduced_fiber.S(W;L)"] = r.value("S(W;L)").str();
  return v;
}

ValueMap group_surfaces(const std::string& data_dir) {
  ValueMap v;
  SurfaceLattice bl2 = load_surface(data_dir, "bl2p2");
  v["volume.bl2p2_sigma_p"] = volume(bl2, {Rational(3), Rational(-2), Rational(-2)}).str();
  v["volume.bl2p2_sigma_q1"] = volume(bl2, {Rational(3), Rational(1), Rational(-2)}).str();
  std::vector<Vec2> w{{Rational(1), Rational(0)},
                      {Rational(0), Rational(1)},
                      {Rational(0), Rational(1)},
                      {Rational(1), Rational(3)}};
  CoxZariski cz = zariski_cox(Vec2{Rational(2), Rational(5)}, w);
  v["cox.appendixB_mu1"] = cz.mu[0].str();
  v["cox.appendixB_wP"] = cz.wP.str();
  v["quartic.det_constant"] = discriminant_identity_constant().str();
  return v;
}

ValueMap group_aut(const std::string& data_dir) {
  ValueMap v;
  std::set<std::string> types;
  for (const auto& row_name : table_row_names(data_dir)) {
    TableRow row = load_table_row(data_dir, row_name);
    RowReport rep = verify_table_row(row);
    if (rep.passed()) types.insert(rep.identified);
  }
  std::string joined;
  for (const auto& t : types) {
    if (!joined.empty()) joined += ",";
    joined += t;
  }
  v["aut.types"] = joined;
  return v;
}

}  // namespace

std::vector<GoldenOutcome> run_golden(const std::string& data_dir, bool parallel) {
  // independent case groups, evaluated as parallel tasks and merged in order
  std::vector<std::function<ValueMap()>> groups{
      [&] { return group_threefold(data_dir); },
      [&] { return group_reducible_fiber(data_dir); },
      [&] { return group_other_flags(data_dir); },
      [&] { return group_surfaces(data_dir); },
      [&] { return group_aut(data_dir); },
  };
  auto results = map_indexed<ValueMap>(groups.size(),
                                       parallel ? Exec::Parallel : Exec::Serial,
                                       [&](std::size_t i) { return groups[i](); });
  ValueMap values;
  for (const auto& part : results) values.insert(part.begin(), part.end());

  std::vector<GoldenOutcome> out;
  for (const auto& e : golden_table()) {
    GoldenOutcome o;
    o.name = e.name;
    o.expected = e.expected;
    auto it = values.find(e.name);
    o.actual = it == values.end() ? "<missing>" : it->second;
    o.ok = o.actual == o.expected;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace fano216
