#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano216/chamber.hpp"
#include "fano216/surface.hpp"
#include "fano216/threefold.hpp"

namespace fano216 {

// A curve that appears in the fixed negative part N(u)|_S without being a
// tracked negative curve of the lattice (e.g. the restriction of the
// exceptional surface).
struct FixedCurve {
  std::string name;
  DivisorClass cls;
};

// Flag configuration: a surface inside the threefold, the piecewise
// restriction data of the one-parameter family, and the scan curve.
struct FlagSurfaceConfig {
  std::string name;
  SurfaceLattice surface;
  std::vector<FixedCurve> fixed_curves;
  // per restriction piece, aligned with `fixed_curves`: coefficients of
  // N(u)|_S as polynomials in u
  std::vector<std::vector<Poly>> fixed_coeffs;
  std::vector<RestrictionPiece> pieces;
  std::string curve_name;
  DivisorClass curve_class;
  std::optional<std::size_t> curve_fixed;  // index into fixed_curves if the scan curve is one
  Rational volume_normalizer;              // (-K_X)^3 of the ambient threefold
};

// Point data: local intersection multiplicities with the scan curve at the
// point, split by where the other branch lives.
struct PointSpec {
  std::string name;
  std::map<std::size_t, Rational> tracked_mults;  // tracked index -> (C_i . C)_P
  std::map<std::size_t, Rational> fixed_mults;    // fixed index -> (D . C)_P
  bool on_curve = true;
};

struct PltBlowupModel {
  enum class Type { Ordinary, Weighted } type = Type::Ordinary;
  long w1 = 1, w2 = 1;
  Rational g_self;               // G^2
  Rational log_discrepancy;      // A_S(G)
  std::vector<long> orbifold_orders;  // orders n of the quotient points on G
  std::size_t g_tracked = 0;     // index of G in the blown-up tracked list
  // tracked index of each promoted fixed-curve transform, -1 if not promoted
  std::vector<long> fixed_promoted_tracked;

  Rational different_at(std::size_t point_idx) const {
    long n = orbifold_orders.at(point_idx);
    return Rational(n - 1, n);
  }
};

struct BlowupSpec {
  PltBlowupModel::Type type = PltBlowupModel::Type::Ordinary;
  long w1 = 1, w2 = 1;
  std::map<std::size_t, Rational> tracked_mults;  // multiplicity of tracked curves at P
  std::map<std::size_t, Rational> fixed_mults;    // multiplicity of fixed curves at P
};

struct DeltaEntry {
  std::string name;
  Rational value;
  std::string anchor;  // section/equation label recorded in certificates
};

struct DeltaReport {
  std::string case_label;
  std::vector<DeltaEntry> values;
  Rational bound;
  std::string theorem_shape;
  std::vector<std::string> notes;

  const Rational& value(const std::string& name) const;
  void add(std::string name, Rational v, std::string anchor = "");
};

// t(u) at a given u, by exact feasibility against the surface's effective cone.
Rational pseff_threshold_2d(const FlagSurfaceConfig& config, const Rational& u);

// Chamber structure of P(u)|_S - v*C over the whole domain.
ChamberedZariski chambered_zariski_config(const FlagSurfaceConfig& config);

// ord_C(N(u)|_S) term plus (3/V) * double integral of P(u,v)^2.
Rational s_w_curve(const FlagSurfaceConfig& config, const ChamberedZariski& cz);

struct PointValue {
  Rational base;   // (3/V) * int (P(u,v).C)^2
  Rational f_term; // F_P
  Rational total;
};

// S(W;P) = base + F_P, where F_P carries the fixed-negative local
// multiplicity term and the ord_P(N(u,v)|_C) term.
PointValue s_w_point(const FlagSurfaceConfig& config, const ChamberedZariski& cz,
                     const PointSpec& point);

// Extends the lattice by the exceptional curve G of the (possibly weighted)
// blow-up at a point with the given curve multiplicities.
std::pair<FlagSurfaceConfig, PltBlowupModel> blowup_lattice(const FlagSurfaceConfig& config,
                                                            const BlowupSpec& spec);

// S(W;G): ord_G(g^*(N(u)|_S)) term plus (3/V) * double integral over the
// blown-up chamber structure.
Rational s_w_exceptional(const FlagSurfaceConfig& original, const FlagSurfaceConfig& blown,
                         const BlowupSpec& spec, const ChamberedZariski& cz_hat);

// Quotient-style delta bound from imported surface estimates.
struct QuotientBoundInputs {
  // delta_P(S, D_t) >= num(t)/den(t) per fiber type; rational functions whose
  // combination with D_t^2 must simplify to a polynomial before integration
  Poly smooth_num, smooth_den;
  Poly reducible_num, reducible_den;
  Rational delta_surface;      // lower bound for delta(S)
  Poly dt_square;              // D_t^2 as a polynomial in t
  Rational ks_square;          // K_S^2
  // (P(u).P(u).S) * ord_F(Gamma) integrand on [exc_lo, exc_hi], derived from
  // the threefold path with ord_F(Gamma) bounded by A_S(F)
  Poly exc_integrand;
  Rational exc_lo, exc_hi;
};

struct QuotientBound {
  Rational gamma;
  Rational s_total;            // per unit A_S(F)
  std::vector<DeltaEntry> terms;
};

QuotientBound quotient_delta_bound(const QuotientBoundInputs& in, bool reducible, bool on_e,
                                    const Rational& volume_normalizer);

// Assembled delta bounds for the configurations shipped with the repo.
// Known case labels: quotient_smooth_offE, quotient_smooth_onE,
// quotient_reducible_offE, quotient_reducible_onE, reducible_fiber, iskovskikh, nonreduced_fiber,
// sxs (the one-parameter S_X(S) computation alone).
DeltaReport delta_bound(const std::string& case_label, const std::string& data_dir);

std::vector<std::string> delta_case_names();

}  // namespace fano216
