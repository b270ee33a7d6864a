#include <doctest.h>

#include "fano216/flagdelta.hpp"
#include "fano216/models.hpp"

using namespace fano216;

namespace {
const std::string& dir() {
  static std::string d = default_data_dir();
  return d;
}
}

TEST_CASE("S(W;C) for the three shipped flag configurations") {
  {
    FlagSurfaceConfig cfg = load_flag_config(dir(), "reducible_fiber");
    ChamberedZariski cz = chambered_zariski_config(cfg);
    CHECK(s_w_curve(cfg, cz) == Rational(161, 176));
  }
  {
    FlagSurfaceConfig cfg = load_flag_config(dir(), "iskovskikh");
    ChamberedZariski cz = chambered_zariski_config(cfg);
    CHECK(s_w_curve(cfg, cz) == Rational(19, 22));
  }
  {
    FlagSurfaceConfig cfg = load_flag_config(dir(), "nonreduced_fiber");
    ChamberedZariski cz = chambered_zariski_config(cfg);
    CHECK(s_w_curve(cfg, cz) == Rational(31, 22));
  }
}

TEST_CASE("point stage of the reducible-fiber case, all six memberships") {
  FlagCaseData data = load_flag_case(dir(), "reducible_fiber");
  ChamberedZariski cz = chambered_zariski_config(data.config);
  std::map<std::string, std::pair<Rational, Rational>> expect{
      {"P_generic", {Rational(0), Rational(69, 88)}},
      {"P_L2", {Rational(3, 16), Rational(171, 176)}},
      {"P_e", {Rational(5, 176), Rational(13, 16)}},
      {"P_Gamma", {Rational(1, 22), Rational(73, 88)}},
      {"P_Gamma_L2", {Rational(41, 176), Rational(179, 176)}},
      {"P_Gamma_e", {Rational(13, 176), Rational(151, 176)}},
  };
  for (const auto& pt : data.points) {
    PointValue pv = s_w_point(data.config, cz, pt);
    CHECK(pv.base == Rational(69, 88));
    auto [f, total] = expect.at(pt.name);
    CHECK(pv.f_term == f);
    CHECK(pv.total == total);
  }
}

TEST_CASE("blow-up lattice of the triple point") {
  FlagCaseData data = load_flag_case(dir(), "reducible_fiber");
  auto [blown, plt] = blowup_lattice(data.config, data.blowup);
  CHECK(plt.g_self == Rational(-1));
  CHECK(plt.log_discrepancy == Rational(2));
  auto self = [&](const std::string& name) {
    for (std::size_t i = 0; i < blown.surface.tracked_names.size(); ++i)
      if (blown.surface.tracked_names[i] == name)
        return intersect(blown.surface, blown.surface.tracked[i], blown.surface.tracked[i]);
    throw std::out_of_range(name);
  };
  CHECK(self("L1") == Rational(-2));
  CHECK(self("L2") == Rational(-2));
  CHECK(self("Gamma") == Rational(-1));
  // pairwise disjoint after the blow-up
  auto cls = [&](const std::string& name) {
    for (std::size_t i = 0; i < blown.surface.tracked_names.size(); ++i)
      if (blown.surface.tracked_names[i] == name) return blown.surface.tracked[i];
    throw std::out_of_range(name);
  };
  CHECK(intersect(blown.surface, cls("L1"), cls("L2")) == Rational(0));
  CHECK(intersect(blown.surface, cls("L1"), cls("Gamma")) == Rational(0));
  CHECK(intersect(blown.surface, cls("L2"), cls("Gamma")) == Rational(0));
  CHECK(intersect(blown.surface, cls("g"), cls("g")) == Rational(-1));
}

TEST_CASE("the shipped blow-up lattice file matches the constructed extension") {
  FlagCaseData data = load_flag_case(dir(), "reducible_fiber");
  auto [blown, plt] = blowup_lattice(data.config, data.blowup);
  SurfaceLattice file = load_surface(dir(), "dp4_reducible_blowup");
  CHECK(file.gram == blown.surface.gram);
  REQUIRE(file.tracked.size() == blown.surface.tracked.size());
  for (std::size_t i = 0; i < file.tracked.size(); ++i) {
    CHECK(file.tracked_names[i] == blown.surface.tracked_names[i]);
    CHECK(file.tracked[i] == blown.surface.tracked[i]);
  }
  CHECK(file.eff_generators == blown.surface.eff_generators);
}

TEST_CASE("ordinary blow-up of a point off all curves changes nothing else") {
  FlagCaseData data = load_flag_case(dir(), "iskovskikh");
  BlowupSpec spec;  // no multiplicities: the point is off every curve
  auto [blown, plt] = blowup_lattice(data.config, spec);
  CHECK(blown.surface.rank() == data.config.surface.rank() + 1);
  for (std::size_t i = 0; i < data.config.surface.tracked.size(); ++i) {
    DivisorClass expectc = data.config.surface.tracked[i];
    expectc.push_back(Rational(0));
    CHECK(blown.surface.tracked[i] == expectc);
  }
  // weighted (1,1) degenerates to the ordinary case
  BlowupSpec w11;
  w11.type = PltBlowupModel::Type::Weighted;
  w11.w1 = w11.w2 = 1;
  auto [blown2, plt2] = blowup_lattice(data.config, w11);
  CHECK(plt2.g_self == Rational(-1));
  CHECK(plt2.log_discrepancy == Rational(2));
  CHECK(plt2.orbifold_orders.empty());
}

TEST_CASE("weighted blow-up model data") {
  FlagCaseData data = load_flag_case(dir(), "iskovskikh");
  BlowupSpec spec;
  spec.type = PltBlowupModel::Type::Weighted;
  spec.w1 = 2;
  spec.w2 = 3;
  auto [blown, plt] = blowup_lattice(data.config, spec);
  CHECK(plt.g_self == Rational(-1, 6));
  CHECK(plt.log_discrepancy == Rational(5));
  REQUIRE(plt.orbifold_orders.size() == 2);
  // ord_O(Delta_G) = (n-1)/n at the two quotient points
  CHECK(plt.different_at(0) == Rational(1, 2));
  CHECK(plt.different_at(1) == Rational(2, 3));
}

TEST_CASE("exceptional-stage values of the blow-up") {
  FlagCaseData data = load_flag_case(dir(), "reducible_fiber");
  auto [blown, plt] = blowup_lattice(data.config, data.blowup);
  ChamberedZariski cz = chambered_zariski_config(blown);
  CHECK(s_w_exceptional(data.config, blown, data.blowup, cz) == Rational(85, 44));
  std::map<std::string, std::pair<Rational, Rational>> expect{
      {"O_generic", {Rational(0), Rational(37, 88)}},
      {"O_L1", {Rational(87, 176), Rational(161, 176)}},
      {"O_Gamma", {Rational(9, 88), Rational(23, 44)}},
  };
  for (const auto& pt : data.blowup_points) {
    PointValue pv = s_w_point(blown, cz, pt);
    CHECK(pv.base == Rational(37, 88));
    auto [f, total] = expect.at(pt.name);
    CHECK(pv.f_term == f);
    CHECK(pv.total == total);
  }
}

TEST_CASE("quotient bounds integrate the imported estimates to polynomials") {
  QuotientBoundInputs in = load_quotient_inputs(dir());
  in.exc_integrand = Rational(4) * Poly({Rational(2), Rational(-1)}) *
                     Poly({Rational(2), Rational(-1)}) * Poly({Rational(-1), Rational(1)});
  in.exc_lo = Rational(1);
  in.exc_hi = Rational(2);
  auto smooth = quotient_delta_bound(in, false, false, Rational(22));
  CHECK(smooth.gamma == Rational(176, 161));
  auto red_on = quotient_delta_bound(in, true, true, Rational(22));
  CHECK(red_on.gamma == Rational(88, 89));
  // a bound whose integrand does not simplify must be rejected
  QuotientBoundInputs bad = in;
  bad.reducible_den = Poly({Rational(1), Rational(1), Rational(1)});
  bad.reducible_num = Poly({Rational(2), Rational(0), Rational(1)});  // t^2 + 2
  CHECK_THROWS_WITH_AS(static_cast<void>(quotient_delta_bound(bad, true, false, Rational(22))),
                       "nonpolynomial bound integrand", std::domain_error);
}

TEST_CASE("assembled bounds per case") {
  CHECK(delta_bound("reducible_fiber", dir()).bound == Rational(176, 171));
  DeltaReport p55 = delta_bound("iskovskikh", dir());
  CHECK(p55.bound == Rational(22, 19));
  CHECK(delta_bound("quotient_smooth_offE", dir()).bound == Rational(176, 161));
  DeltaReport sxs = delta_bound("sxs", dir());
  CHECK(sxs.value("S_X(S)") == Rational(13, 22));
  CHECK(sxs.value("beta(S)") == Rational(9, 22));
  CHECK_THROWS(delta_bound("nonsense", dir()));
}

TEST_CASE("delta_bound is monotone in the S-values") {
  // enlarging any S-value never increases the assembled minimum of inverses
  std::vector<Rational> s{Rational(13, 22), Rational(161, 176), Rational(69, 88)};
  auto assemble = [](const std::vector<Rational>& xs) {
    Rational best = Rational(1) / xs[0];
    for (const auto& x : xs) best = std::min(best, Rational(1) / x);
    return best;
  };
  Rational base = assemble(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto bigger = s;
    bigger[i] += Rational(1, 10);
    CHECK(assemble(bigger) <= base);
  }
}

TEST_CASE("every S-value in the shipped configurations is nonnegative and S_X < 1") {
  for (const char* name :
       {"sxs", "quotient_smooth_offE", "reducible_fiber", "iskovskikh", "nonreduced_fiber"}) {
    DeltaReport rep = delta_bound(name, dir());
    CHECK(rep.value("S_X(S)") < Rational(1));
    for (const auto& e : rep.values) {
      if (e.name.rfind("S(", 0) == 0 || e.name.rfind("S_X", 0) == 0)
        CHECK(e.value >= Rational(0));
    }
  }
}
