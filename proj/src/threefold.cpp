#include "fano216/threefold.hpp"

#include <algorithm>
#include <stdexcept>

#include "fano216/coxcone.hpp"
#include "fano216/linprog.hpp"

namespace fano216 {

Rational ThreefoldModel::triple(const Class2& a, const Class2& b, const Class2& c) const {
  Rational acc(0);
  for (int i = 0; i < 2; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < 2; ++j) {
      if (b[j].is_zero()) continue;
      for (int k = 0; k < 2; ++k) acc += a[i] * b[j] * c[k] * tensor[i][j][k];
    }
  }
  return acc;
}

void ThreefoldModel::validate() const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const Rational& t = tensor[i][j][k];
        if (!(t == tensor[i][k][j] && t == tensor[j][i][k] && t == tensor[k][j][i]))
          throw std::invalid_argument("ThreefoldModel: tensor not symmetric");
      }
  if (nef_gens.size() != 2 || eff_gens.size() != 2)
    throw std::invalid_argument("ThreefoldModel: expected two cone generators each");
  Rational v = triple(anticanonical, anticanonical, anticanonical);
  if (!(v == anticanonical_cube))
    throw std::invalid_argument("ThreefoldModel: (-K)^3 mismatch with tensor");
}

namespace {

Vec2 to_vec(const Class2& c) { return Vec2{c[0], c[1]}; }

// cross(r, base + u*dir) as a degree-1 polynomial in u
Poly cross_poly(const Vec2& r, const Class2& base, const Class2& dir) {
  Rational c0 = r.x * base[1] - r.y * base[0];
  Rational c1 = r.x * dir[1] - r.y * dir[0];
  return Poly({c0, c1});
}

}  // namespace

DivisorPath1D threefold_path(const ThreefoldModel& model, const Class2& base,
                             const Class2& direction) {
  std::vector<std::vector<Rational>> eff;
  for (const auto& g : model.eff_gens) eff.push_back({g[0], g[1]});
  auto tau_opt = cone_exit_threshold(eff, {base[0], base[1]}, {direction[0], direction[1]});
  if (!tau_opt) throw std::domain_error("threefold_path: base not effective");
  Rational tau = *tau_opt;

  // nef membership along the path: two affine sign conditions
  Sector nef = Sector::span(to_vec(model.nef_gens[0]), to_vec(model.nef_gens[1]));
  auto rays = nef.rays();
  if (rays.size() != 2) throw std::invalid_argument("threefold_path: degenerate nef cone");
  const Vec2 lo = rays[0], hi = rays[1];

  // condition polynomials: inside nef iff cLo(u) >= 0 and cHi(u) >= 0
  Poly c_lo = cross_poly(lo, base, direction);          // cross(lo, D(u))
  Poly c_hi = -cross_poly(hi, base, direction);         // cross(D(u), hi)

  // collect breakpoints of sign change within [0, tau]
  std::vector<Rational> cuts{Rational(0), tau};
  for (const Poly* c : {&c_lo, &c_hi}) {
    if (c->degree() == 1) {
      Rational root = -c->coeff(0) / c->coeff(1);
      if (root > Rational(0) && root < tau) cuts.push_back(root);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  DivisorPath1D path;
  path.tau = tau;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Rational a = cuts[k], b = cuts[k + 1];
    Rational mid = (a + b) / Rational(2);
    PathPiece piece;
    piece.u_lo = a;
    piece.u_hi = b;
    ClassPath d{Poly({base[0], direction[0]}), Poly({base[1], direction[1]})};
    bool in_lo = c_lo.eval(mid) >= Rational(0);
    bool in_hi = c_hi.eval(mid) >= Rational(0);
    if (in_lo && in_hi) {
      piece.positive = d;
      piece.negative = ClassPath{Poly(), Poly()};
    } else {
      // project along the effective generator on the violated side
      const Vec2 boundary = in_hi ? lo : hi;
      const Rational s_dm =
          in_hi ? c_lo.eval(mid) : -c_hi.eval(mid);  // cross(boundary, D(mid))
      Vec2 g{Rational(0), Rational(0)};
      bool found = false;
      for (const auto& eg : model.eff_gens) {
        Vec2 v = to_vec(eg);
        Rational s_v = cross(boundary, v);
        if (!s_v.is_zero() && (s_v > Rational(0)) == (s_dm > Rational(0))) {
          g = v;
          found = true;
          break;
        }
      }
      if (!found)
        throw std::domain_error("threefold_path: no effective generator beyond the nef wall");
      // c(u) = cross(boundary, D(u)) / cross(boundary, g); P = D - c*g
      Poly cb = cross_poly(boundary, base, direction);
      Rational denom = cross(boundary, g);
      Poly c_coef = denom.inverse() * cb;
      piece.negative = ClassPath{g.x * c_coef, g.y * c_coef};
      piece.positive = ClassPath{d.h - piece.negative.h, d.e - piece.negative.e};
    }
    // certify the piece at its midpoint
    Class2 pm = piece.positive.at(mid);
    Vec2 pv = to_vec(pm);
    if (!(nef.contains(pv)))
      throw std::logic_error("threefold_path: positive part not nef at sample");
    Class2 nm = piece.negative.at(mid);
    Class2 dm = {base[0] + mid * direction[0], base[1] + mid * direction[1]};
    if (!(pm[0] + nm[0] == dm[0] && pm[1] + nm[1] == dm[1]))
      throw std::logic_error("threefold_path: decomposition does not reconstruct");
    path.pieces.push_back(std::move(piece));
  }
  return path;
}

Poly cube_poly(const ThreefoldModel& model, const ClassPath& p) {
  Poly acc;
  const Poly* comp[2] = {&p.h, &p.e};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        if (model.tensor[i][j][k].is_zero()) continue;
        acc += model.tensor[i][j][k] * (*comp[i] * *comp[j] * *comp[k]);
      }
  return acc;
}

Poly square_dot_poly(const ThreefoldModel& model, const ClassPath& p, const Class2& s) {
  Poly acc;
  const Poly* comp[2] = {&p.h, &p.e};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        if (model.tensor[i][j][k].is_zero() || s[k].is_zero()) continue;
        acc += (model.tensor[i][j][k] * s[k]) * (*comp[i] * *comp[j]);
      }
  return acc;
}

Rational s_threefold(const ThreefoldModel& model, const DivisorPath1D& path) {
  Rational total(0);
  for (const auto& piece : path.pieces) {
    Poly cubed = cube_poly(model, piece.positive);
    total += cubed.integrate(piece.u_lo, piece.u_hi);
  }
  return total / model.anticanonical_cube;
}

}  // namespace fano216
