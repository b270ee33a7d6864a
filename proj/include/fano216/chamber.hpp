#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fano216/parallel.hpp"
#include "fano216/poly.hpp"
#include "fano216/surface.hpp"

namespace fano216 {

using Point2 = std::pair<Rational, Rational>;   // (u, v)
using Polygon = std::vector<Point2>;            // convex, counterclockwise

Rational polygon_area2(const Polygon& p);       // twice the signed area
Point2 polygon_centroid(const Polygon& p);      // vertex average (interior for convex)

// Clip a convex polygon by the line f = 0; returns the f <= 0 and f >= 0 parts.
std::pair<Polygon, Polygon> split_polygon(const Polygon& poly, const AffineUV& f);

// Exact integral of a bivariate polynomial over a convex polygon, by
// v-then-u iterated integration over vertical strips.
Rational integrate_polygon(const Bivar& f, const Polygon& poly);

// One restriction piece of a divisor family on a surface: for u in
// [u_lo, u_hi], the class B(u) (entries affine in u) and the coefficients of
// the fixed negative divisor N(u)|_S on the tracked curves.
struct RestrictionPiece {
  Rational u_lo, u_hi;
  std::vector<Poly> b_class;                    // rank-sized, degree <= 1
  std::vector<Poly> fixed_negative;             // per tracked curve, degree <= 1

  std::vector<Rational> class_at(const Rational& u) const;
};

// t(u) on a subinterval: t = a + b*u.
struct ThresholdPiece {
  Rational u_lo, u_hi;
  Rational a, b;
  Rational at(const Rational& u) const { return a + b * u; }
};

// Pseudo-effective threshold sup{v : B(u0) - v*C effective} at a fixed u,
// by exact linear programming against the effective-cone generators.
Rational pseff_threshold_at(const SurfaceLattice& lat, const std::vector<Rational>& b_at_u,
                            const DivisorClass& curve);

// The full piecewise-affine t(u) over one restriction piece, certified by
// the concavity chord test at exact rational points.
std::vector<ThresholdPiece> threshold_pieces(const SurfaceLattice& lat,
                                             const RestrictionPiece& piece,
                                             const DivisorClass& curve);

struct Chamber {
  Polygon polygon;
  std::size_t piece_index = 0;                               // owning restriction piece
  std::vector<std::size_t> support;                          // tracked indices
  std::vector<AffineUV> n_coeffs;                            // per support entry
  std::vector<AffineUV> p_class;                             // rank-sized
  Bivar p_squared;
  std::vector<AffineUV> p_dot_tracked;                       // per tracked curve
  AffineUV p_dot_curve;                                      // against the scan curve
  Point2 witness;                                            // certified interior point
};

struct ChamberedZariski {
  std::vector<ThresholdPiece> t_pieces;
  std::vector<Chamber> chambers;
};

// Chamber structure of the two-parameter family B(u) - v*C over
// { (u,v) : u in pieces, 0 <= v <= t(u) }.
//
// Support sets are discovered by sampling pointwise Zariski decompositions;
// walls are the exact affine zero loci of the negative-part coefficients and
// of P . C_j; the induced polygonal subdivision is refined until every cell
// is sign-constant for its own support data, then each cell is validated
// against the pointwise decomposition at an interior point.
ChamberedZariski chambered_zariski(const SurfaceLattice& lat,
                                   const std::vector<RestrictionPiece>& pieces,
                                   const DivisorClass& curve);

// Certifies symbolic chamber data against pointwise decompositions on a
// deterministic pseudo-random sample of interior points; throws on the first
// mismatch. Returns the number of points checked.
std::size_t certify_chambers(const SurfaceLattice& lat, const ChamberedZariski& cz,
                             const DivisorClass& curve, std::size_t points_per_chamber,
                             unsigned seed, Exec mode = default_exec());

// Exact integral of P(u,v)^2 via the chambers' polygons.
Rational integrate_p2(const ChamberedZariski& cz);

// The same quantity along an independent route: exact column integrals at
// fixed rational u (1D scans re-deriving the decomposition from scratch),
// then piecewise polynomial reconstruction in u with verification points.
Rational integrate_p2_by_columns(const SurfaceLattice& lat,
                                 const std::vector<RestrictionPiece>& pieces,
                                 const DivisorClass& curve, const ChamberedZariski& cz);

}  // namespace fano216
