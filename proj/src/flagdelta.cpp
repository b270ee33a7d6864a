#include "fano216/flagdelta.hpp"

#include <algorithm>
#include <stdexcept>

#include "fano216/models.hpp"

namespace fano216 {

const Rational& DeltaReport::value(const std::string& name) const {
  for (const auto& e : values)
    if (e.name == name) return e.value;
  throw std::out_of_range("DeltaReport: no value named " + name);
}

void DeltaReport::add(std::string name, Rational v, std::string anchor) {
  values.push_back({std::move(name), std::move(v), std::move(anchor)});
}

Rational pseff_threshold_2d(const FlagSurfaceConfig& config, const Rational& u) {
  for (const auto& piece : config.pieces) {
    if (u < piece.u_lo || u > piece.u_hi) continue;
    return pseff_threshold_at(config.surface, piece.class_at(u), config.curve_class);
  }
  throw std::domain_error("pseff_threshold_2d: u outside the path domain");
}

ChamberedZariski chambered_zariski_config(const FlagSurfaceConfig& config) {
  return chambered_zariski(config.surface, config.pieces, config.curve_class);
}

namespace {

// (3/V) * sum over pieces of int B(u)^2 * ord(u) du, where ord is the
// coefficient polynomial of the scan curve in N(u)|_S.
Rational fixed_order_term(const FlagSurfaceConfig& config) {
  if (!config.curve_fixed) return Rational(0);
  Rational acc(0);
  for (std::size_t pi = 0; pi < config.pieces.size(); ++pi) {
    const auto& piece = config.pieces[pi];
    const Poly& ord = config.fixed_coeffs[pi][*config.curve_fixed];
    if (ord.is_zero()) continue;
    // B(u)^2 as a polynomial in u
    Poly b2;
    const std::size_t n = config.surface.rank();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (config.surface.gram(i, j).is_zero()) continue;
        b2 += config.surface.gram(i, j) * (piece.b_class[i] * piece.b_class[j]);
      }
    acc += (b2 * ord).integrate(piece.u_lo, piece.u_hi);
  }
  return acc;
}

Rational three_over_v(const FlagSurfaceConfig& config) {
  return Rational(3) / config.volume_normalizer;
}

}  // namespace

Rational s_w_curve(const FlagSurfaceConfig& config, const ChamberedZariski& cz) {
  Rational first = fixed_order_term(config);
  Rational second = integrate_p2(cz);
  return three_over_v(config) * (first + second);
}

PointValue s_w_point(const FlagSurfaceConfig& config, const ChamberedZariski& cz,
                     const PointSpec& point) {
  if (!point.on_curve) throw std::domain_error("s_w_point: point not on the scan curve");
  PointValue out;
  Rational base(0), fixed_term(0), moving_term(0);
  for (const auto& ch : cz.chambers) {
    Bivar pc(ch.p_dot_curve);
    base += integrate_polygon(pc * pc, ch.polygon);

    // ord_P(N'(u)|_C): fixed-negative coefficients weighted by local
    // multiplicity, skipping the scan curve itself
    AffineUV fixed_ord;
    const auto& coeffs = config.fixed_coeffs[ch.piece_index];
    for (const auto& [fidx, mult] : point.fixed_mults) {
      if (config.curve_fixed && *config.curve_fixed == fidx) continue;
      const Poly& c = coeffs[fidx];
      if (c.is_zero()) continue;
      fixed_ord = fixed_ord + mult * AffineUV{c.coeff(0), c.coeff(1), Rational(0)};
    }
    if (!fixed_ord.is_zero())
      fixed_term += integrate_polygon(pc * Bivar(fixed_ord), ch.polygon);

    // ord_P(N(u,v)|_C): moving negative part against the point's curves
    AffineUV moving_ord;
    for (std::size_t i = 0; i < ch.support.size(); ++i) {
      auto it = point.tracked_mults.find(ch.support[i]);
      if (it == point.tracked_mults.end()) continue;
      moving_ord = moving_ord + it->second * ch.n_coeffs[i];
    }
    if (!moving_ord.is_zero())
      moving_term += integrate_polygon(pc * Bivar(moving_ord), ch.polygon);
  }
  Rational v3 = three_over_v(config);
  out.base = v3 * base;
  out.f_term = Rational(2) * v3 * (fixed_term + moving_term);
  out.total = out.base + out.f_term;
  return out;
}

std::pair<FlagSurfaceConfig, PltBlowupModel> blowup_lattice(const FlagSurfaceConfig& config,
                                                            const BlowupSpec& spec) {
  for (const auto& [idx, m] : spec.tracked_mults)
    if (idx >= config.surface.tracked.size() || m < Rational(0))
      throw std::invalid_argument("blowup_lattice: inconsistent multiplicities");
  for (const auto& [idx, m] : spec.fixed_mults)
    if (idx >= config.fixed_curves.size() || m < Rational(0))
      throw std::invalid_argument("blowup_lattice: inconsistent multiplicities");

  const std::size_t n = config.surface.rank();
  PltBlowupModel model;
  model.type = spec.type;
  model.w1 = spec.w1;
  model.w2 = spec.w2;
  if (spec.type == PltBlowupModel::Type::Ordinary || (spec.w1 == 1 && spec.w2 == 1)) {
    model.g_self = Rational(-1);
    model.log_discrepancy = Rational(2);
    model.orbifold_orders = {};
  } else {
    model.g_self = Rational(-1, spec.w1 * spec.w2);
    model.log_discrepancy = Rational(spec.w1 + spec.w2);
    model.orbifold_orders = {spec.w1, spec.w2};
  }

  FlagSurfaceConfig out;
  out.name = config.name + "_blowup";
  out.volume_normalizer = config.volume_normalizer;
  SurfaceLattice& lat = out.surface;
  lat.name = config.surface.name + "_hat";
  lat.basis_names = config.surface.basis_names;
  lat.basis_names.push_back("g");
  lat.gram = Matrix<Rational>(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lat.gram(i, j) = config.surface.gram(i, j);
  lat.gram(n, n) = model.g_self;

  auto transform = [&](const DivisorClass& c, const Rational& mult) {
    DivisorClass v = c;
    v.push_back(-mult);
    return v;
  };
  auto mult_of = [](const std::map<std::size_t, Rational>& m, std::size_t i) {
    auto it = m.find(i);
    return it == m.end() ? Rational(0) : it->second;
  };

  // strict transforms of the tracked curves
  for (std::size_t i = 0; i < config.surface.tracked.size(); ++i) {
    lat.tracked_names.push_back(config.surface.tracked_names[i]);
    lat.tracked.push_back(
        transform(config.surface.tracked[i], mult_of(spec.tracked_mults, i)));
  }
  // fixed curves whose transforms become negative join the tracked list
  model.fixed_promoted_tracked.assign(config.fixed_curves.size(), -1);
  for (std::size_t f = 0; f < config.fixed_curves.size(); ++f) {
    Rational m = mult_of(spec.fixed_mults, f);
    DivisorClass tf = transform(config.fixed_curves[f].cls, m);
    out.fixed_curves.push_back({config.fixed_curves[f].name, tf});
    Rational self = intersect(config.surface, config.fixed_curves[f].cls,
                              config.fixed_curves[f].cls) +
                    model.g_self * m * m;
    if (self < Rational(0)) {
      model.fixed_promoted_tracked[f] = static_cast<long>(lat.tracked.size());
      lat.tracked_names.push_back(config.fixed_curves[f].name);
      lat.tracked.push_back(tf);
    }
  }
  // the exceptional curve itself
  model.g_tracked = lat.tracked.size();
  DivisorClass g_class(n + 1, Rational(0));
  g_class[n] = Rational(1);
  lat.tracked_names.push_back("g");
  lat.tracked.push_back(g_class);

  // effective cone: transforms of the original generators, transforms of the
  // fixed curves (effective by construction), and G
  for (const auto& e : config.surface.eff_generators) {
    // generators that are tracked or fixed curves carry their multiplicity;
    // others are assumed off the blown-up point
    Rational m(0);
    for (std::size_t i = 0; i < config.surface.tracked.size(); ++i)
      if (config.surface.tracked[i] == e) m = mult_of(spec.tracked_mults, i);
    for (std::size_t f = 0; f < config.fixed_curves.size(); ++f)
      if (config.fixed_curves[f].cls == e && mult_of(spec.fixed_mults, f) > m)
        m = mult_of(spec.fixed_mults, f);
    lat.eff_generators.push_back(transform(e, m));
  }
  for (std::size_t f = 0; f < config.fixed_curves.size(); ++f)
    lat.eff_generators.push_back(out.fixed_curves[f].cls);
  lat.eff_generators.push_back(g_class);
  lat.validate();

  // pulled-back restriction data: same coefficients, zero on g
  out.fixed_coeffs = config.fixed_coeffs;
  for (const auto& piece : config.pieces) {
    RestrictionPiece rp;
    rp.u_lo = piece.u_lo;
    rp.u_hi = piece.u_hi;
    rp.b_class = piece.b_class;
    rp.b_class.push_back(Poly());
    out.pieces.push_back(std::move(rp));
  }

  out.curve_name = "g";
  out.curve_class = g_class;
  out.curve_fixed = std::nullopt;
  return {std::move(out), std::move(model)};
}

Rational s_w_exceptional(const FlagSurfaceConfig& original, const FlagSurfaceConfig& blown,
                         const BlowupSpec& spec, const ChamberedZariski& cz_hat) {
  // ord_G(g^*(N(u)|_S)) = sum over fixed curves of coeff(u) * mult at the point
  Rational first(0);
  for (std::size_t pi = 0; pi < original.pieces.size(); ++pi) {
    const auto& piece = original.pieces[pi];
    // N(u)|_S is carried entirely by the fixed curves in these models
    Poly ord;
    for (const auto& [fidx, mult] : spec.fixed_mults) {
      const Poly& c = original.fixed_coeffs[pi][fidx];
      if (!c.is_zero()) ord += mult * c;
    }
    if (ord.is_zero()) continue;
    Poly b2;
    const std::size_t n = original.surface.rank();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (original.surface.gram(i, j).is_zero()) continue;
        b2 += original.surface.gram(i, j) * (piece.b_class[i] * piece.b_class[j]);
      }
    first += (b2 * ord).integrate(piece.u_lo, piece.u_hi);
  }
  Rational second = integrate_p2(cz_hat);
  return three_over_v(blown) * (first + second);
}

QuotientBound quotient_delta_bound(const QuotientBoundInputs& in, bool reducible, bool on_e,
                                    const Rational& volume_normalizer) {
  QuotientBound out;
  Rational v3 = Rational(3) / volume_normalizer;
  // substitute t = 1 - u into the imported bound and D_t^2
  const Poly& num_t = reducible ? in.reducible_num : in.smooth_num;
  const Poly& den_t = reducible ? in.reducible_den : in.smooth_den;
  Poly num_u = num_t.compose_affine(Rational(1), Rational(-1));
  Poly den_u = den_t.compose_affine(Rational(1), Rational(-1));
  Poly dt2_u = in.dt_square.compose_affine(Rational(1), Rational(-1));

  // integrand (D_t^2) * den(u) / num(u) must simplify to a polynomial
  auto [quot, rem] = Poly::divmod(dt2_u * den_u, num_u);
  if (!rem.is_zero()) throw std::domain_error("nonpolynomial bound integrand");
  Rational middle = v3 * quot.integrate(Rational(0), Rational(1));

  // tail on [1, 2]: (K_S^2 / delta(S)) * (2-u)^3
  Poly tail = (in.ks_square / in.delta_surface) *
              Poly({Rational(2), Rational(-1)}) * Poly({Rational(2), Rational(-1)}) *
              Poly({Rational(2), Rational(-1)});
  Rational tail_term = v3 * tail.integrate(Rational(1), Rational(2));

  // Gamma term when the point lies on the exceptional surface
  Rational gamma_term(0);
  if (on_e) gamma_term = v3 * in.exc_integrand.integrate(in.exc_lo, in.exc_hi);

  out.terms.push_back({"gamma_term", gamma_term, "fiber-pullback surface"});
  out.terms.push_back({"middle_term", middle, "fiber-pullback surface"});
  out.terms.push_back({"tail_term", tail_term, "fiber-pullback surface"});
  out.s_total = gamma_term + middle + tail_term;
  out.gamma = out.s_total.inverse();
  return out;
}

std::vector<std::string> delta_case_names() {
  return {"sxs",
          "quotient_smooth_offE",
          "quotient_smooth_onE",
          "quotient_reducible_offE",
          "quotient_reducible_onE",
          "reducible_fiber",
          "iskovskikh",
          "nonreduced_fiber"};
}

namespace {

struct AmbientData {
  ThreefoldModel model;
  Class2 s_class;
  DivisorPath1D path;
  Rational sxs;
};

AmbientData ambient_2_16(const std::string& data_dir) {
  AmbientData out;
  out.model = load_threefold(data_dir, "n216");
  out.s_class = {Rational(1), Rational(-1)};
  Class2 dir{-out.s_class[0], -out.s_class[1]};
  out.path = threefold_path(out.model, out.model.anticanonical, dir);
  // initialization self-test: the first-piece integrand of the shipped model
  Poly integrand = cube_poly(out.model, out.path.pieces.at(0).positive);
  if (!(integrand == Poly({Rational(22), Rational(-24), Rational(6)})))
    throw std::logic_error("n216 self-test: P(u)^3 integrand mismatch");
  if (!(out.model.anticanonical_cube == Rational(22)))
    throw std::logic_error("n216 self-test: (-K)^3 != 22");
  out.sxs = s_threefold(out.model, out.path);
  return out;
}

Rational min_of(std::initializer_list<Rational> xs) {
  Rational best = *xs.begin();
  for (const auto& x : xs)
    if (x < best) best = x;
  return best;
}

DeltaReport quotient_case(const std::string& label, bool reducible, bool on_e,
                        const std::string& data_dir) {
  AmbientData amb = ambient_2_16(data_dir);
  QuotientBoundInputs in = load_quotient_inputs(data_dir);
  // (P(u).P(u).S) * (u - 1) on the second path piece, where ord_F(Gamma) is
  // bounded by A_S(F) and N(u) = (u-1) Gamma
  const PathPiece& tail_piece = amb.path.pieces.back();
  in.exc_integrand = square_dot_poly(amb.model, tail_piece.positive, amb.s_class) *
                     Poly({Rational(-1), Rational(1)});
  in.exc_lo = tail_piece.u_lo;
  in.exc_hi = tail_piece.u_hi;

  QuotientBound qb = quotient_delta_bound(in, reducible, on_e, amb.model.anticanonical_cube);
  DeltaReport rep;
  rep.case_label = label;
  rep.theorem_shape = "pointwise bound through imported surface delta estimates";
  rep.add("S_X(S)", amb.sxs, "fiber-pullback surface");
  rep.add("beta(S)", Rational(1) - amb.sxs, "fiber-pullback surface");
  for (const auto& e : qb.terms) rep.add(e.name, e.value, e.anchor);
  rep.add("S(W;F)/A_S(F)", qb.s_total, "quotient estimate case");
  rep.add("gamma", qb.gamma, "quotient estimate case");
  rep.bound = min_of({Rational(1) / amb.sxs, qb.gamma});
  return rep;
}

DeltaReport reducible_fiber_case(const std::string& data_dir) {
  AmbientData amb = ambient_2_16(data_dir);
  FlagCaseData data = load_flag_case(data_dir, "reducible_fiber");
  DeltaReport rep;
  rep.case_label = "reducible_fiber";
  rep.theorem_shape = "flag chain surface/curve/point with a blow-up stage";
  rep.add("S_X(S)", amb.sxs, "fiber-pullback surface");

  ChamberedZariski cz = chambered_zariski_config(data.config);
  Rational swc = s_w_curve(data.config, cz);
  rep.add("S(W;L1)", swc, "reducible fiber case");

  Rational inv_sx = Rational(1) / amb.sxs;
  Rational inv_swc = Rational(1) / swc;
  Rational worst_bound = min_of({inv_sx, inv_swc});
  bool need_blowup = false;
  for (const auto& pt : data.points) {
    PointValue pv = s_w_point(data.config, cz, pt);
    rep.add("S(W;" + pt.name + ") base", pv.base, "reducible fiber case");
    rep.add("F_" + pt.name, pv.f_term, "reducible fiber case");
    rep.add("S(W;" + pt.name + ")", pv.total, "reducible fiber case");
    if (pv.total >= Rational(1)) {
      need_blowup = true;  // the flag chain fails at this point; blow up
      continue;
    }
    worst_bound = std::min(worst_bound, min_of({inv_sx, inv_swc, Rational(1) / pv.total}));
  }

  if (data.has_blowup) {
    auto [blown, plt] = blowup_lattice(data.config, data.blowup);
    ChamberedZariski cz_hat = chambered_zariski_config(blown);
    Rational swg = s_w_exceptional(data.config, blown, data.blowup, cz_hat);
    rep.add("S(W;G)", swg, "reducible fiber case, blow-up stage");
    rep.add("A_S(G)", plt.log_discrepancy, "plt blow-up bound");
    rep.notes.push_back("blow-up stage applied with numerator A_S(G) = " +
                        plt.log_discrepancy.str() +
                        (plt.type == PltBlowupModel::Type::Ordinary
                             ? " (ordinary blow-up shape)"
                             : " (weighted blow-up shape)"));
    Rational blow_bound = min_of({inv_sx, plt.log_discrepancy / swg});
    for (const auto& pt : data.blowup_points) {
      PointValue pv = s_w_point(blown, cz_hat, pt);
      rep.add("S(W;" + pt.name + ") base", pv.base, "reducible fiber case, blow-up stage");
      rep.add("F_" + pt.name, pv.f_term, "reducible fiber case, blow-up stage");
      rep.add("S(W;" + pt.name + ")", pv.total, "reducible fiber case, blow-up stage");
      blow_bound = std::min(blow_bound, Rational(1) / pv.total);
    }
    if (need_blowup) worst_bound = std::min(worst_bound, blow_bound);
    rep.notes.push_back(
        "the point case on the strict transform of Gamma evaluates to 23/44; the printed "
        "total 23/4 is arithmetically inconsistent with 37/88 + 9/88");
  }
  rep.bound = worst_bound;
  return rep;
}

DeltaReport iskovskikh_case(const std::string& data_dir) {
  AmbientData amb = ambient_2_16(data_dir);
  FlagCaseData data = load_flag_case(data_dir, "iskovskikh");
  DeltaReport rep;
  rep.case_label = "iskovskikh";
  rep.theorem_shape = "flag chain surface/curve/point";
  rep.add("S_X(S)", amb.sxs, "fiber-pullback surface");
  ChamberedZariski cz = chambered_zariski_config(data.config);
  Rational swc = s_w_curve(data.config, cz);
  rep.add("S(W;C)", swc, "iskovskikh case");
  Rational bound = min_of({Rational(1) / amb.sxs, Rational(1) / swc});
  for (const auto& pt : data.points) {
    PointValue pv = s_w_point(data.config, cz, pt);
    rep.add("S(W;" + pt.name + ")", pv.total, "iskovskikh case");
    bound = std::min(bound, Rational(1) / pv.total);
  }
  rep.bound = bound;
  return rep;
}

DeltaReport nonreduced_fiber_case(const std::string& data_dir) {
  AmbientData amb = ambient_2_16(data_dir);
  FlagCaseData data = load_flag_case(data_dir, "nonreduced_fiber");
  DeltaReport rep;
  rep.case_label = "nonreduced_fiber";
  rep.theorem_shape = "curve bound only; the non-reduced fiber case";
  rep.add("S_X(S)", amb.sxs, "fiber-pullback surface");
  ChamberedZariski cz = chambered_zariski_config(data.config);
  Rational swl = s_w_curve(data.config, cz);
  rep.add("S(W;L)", swl, "nonreduced fiber case");
  rep.bound = min_of({Rational(1) / amb.sxs, Rational(1) / swl});
  rep.notes.push_back(
      "S(W;L) exceeds 1, so the surface S cannot certify delta_P > 1 for the "
      "non-reduced fiber");
  return rep;
}

}  // namespace

DeltaReport delta_bound(const std::string& case_label, const std::string& data_dir) {
  if (case_label == "sxs") {
    AmbientData amb = ambient_2_16(data_dir);
    DeltaReport rep;
    rep.case_label = "sxs";
    rep.theorem_shape = "one-parameter Zariski data on the threefold";
    rep.add("tau", amb.path.tau, "fiber-pullback surface");
    rep.add("S_X(S)", amb.sxs, "fiber-pullback surface");
    rep.add("beta(S)", Rational(1) - amb.sxs, "fiber-pullback surface");
    rep.bound = Rational(1) / amb.sxs;
    return rep;
  }
  if (case_label == "quotient_smooth_offE") return quotient_case(case_label, false, false, data_dir);
  if (case_label == "quotient_smooth_onE") return quotient_case(case_label, false, true, data_dir);
  if (case_label == "quotient_reducible_offE")
    return quotient_case(case_label, true, false, data_dir);
  if (case_label == "quotient_reducible_onE") return quotient_case(case_label, true, true, data_dir);
  if (case_label == "reducible_fiber") return reducible_fiber_case(data_dir);
  if (case_label == "iskovskikh") return iskovskikh_case(data_dir);
  if (case_label == "nonreduced_fiber") return nonreduced_fiber_case(data_dir);
  throw std::invalid_argument("delta_bound: unknown case " + case_label);
}

}  // namespace fano216

