#pragma once

#include <array>
#include <string>
#include <vector>

#include "fano216/poly.hpp"
#include "fano216/rational.hpp"

namespace fano216 {

using Class2 = std::array<Rational, 2>;

// Rank-2 divisor class lattice of the threefold with its symmetric trilinear
// intersection form and cone data.
struct ThreefoldModel {
  std::string name;
  std::array<std::string, 2> labels;  // e.g. H, E
  // t[i][j][k], symmetric in all slots
  Rational tensor[2][2][2];
  Class2 anticanonical;
  std::vector<Class2> nef_gens;  // two generators
  std::vector<Class2> eff_gens;  // two generators
  Rational anticanonical_cube;   // recomputed and checked on load

  Rational triple(const Class2& a, const Class2& b, const Class2& c) const;
  void validate() const;
};

// An affine 2-vector of polynomials in u, one class per parameter value.
struct ClassPath {
  Poly h, e;
  Class2 at(const Rational& u) const { return {h.eval(u), e.eval(u)}; }
};

struct PathPiece {
  Rational u_lo, u_hi;
  ClassPath positive;
  ClassPath negative;
};

// One-parameter Zariski data for base + u*direction on [0, tau].
struct DivisorPath1D {
  Rational tau;
  std::vector<PathPiece> pieces;
};

// Positive/negative parts along the ray, found by projecting onto the nef
// cone along the effective boundary generator (rank 2: one wall crossing on
// each side of the nef chamber).
DivisorPath1D threefold_path(const ThreefoldModel& model, const Class2& base,
                             const Class2& direction);

// (1/(-K)^3) * integral of P(u)^3 du over the path domain.
Rational s_threefold(const ThreefoldModel& model, const DivisorPath1D& path);

// P(u)^3 as a polynomial on one piece.
Poly cube_poly(const ThreefoldModel& model, const ClassPath& p);

// P(u).P(u).S as a polynomial on one piece.
Poly square_dot_poly(const ThreefoldModel& model, const ClassPath& p, const Class2& s);

}  // namespace fano216
