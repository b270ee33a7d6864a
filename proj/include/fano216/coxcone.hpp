#pragma once

#include <array>
#include <string>
#include <vector>

#include "fano216/rational.hpp"

namespace fano216 {

// Exact 2D cone arithmetic for rank-2 class groups. Higher rank is out of
// scope and rejected.
struct Vec2 {
  Rational x, y;
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Rational& k, const Vec2& v) { return {k * v.x, k * v.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Lowest integer terms, direction preserved.
Vec2 primitive(const Vec2& v);

// A convex cone in the plane spanned by at most two rays: {0}, a single ray,
// a full line (two opposite rays), or a sector of angular span < 180 degrees
// stored counterclockwise (cross(lo, hi) > 0).
class Sector {
 public:
  enum class Kind { Zero, Ray, Line, Span };

  static Sector zero() { return Sector(); }
  static Sector ray(const Vec2& r);
  static Sector span(const Vec2& a, const Vec2& b);  // canonicalizes orientation
  static Sector hull(const std::vector<Vec2>& gens);  // error if wider than a line

  Kind kind() const { return kind_; }
  // 0, 1 or 2 extremal rays in lowest integer terms (a line reports both directions).
  std::vector<Vec2> rays() const;
  bool contains(const Vec2& v) const;

  friend Sector sector_intersect(const Sector& a, const Sector& b);

  std::string str() const;

 private:
  Sector() : kind_(Kind::Zero) {}
  Kind kind_;
  Vec2 lo_, hi_;
};

struct CoxZariski {
  Vec2 wP, wN;
  std::vector<Rational> mu;
};

// Decomposition from Cox-ring generator degrees: for each i the cone
//   tau_i = cone(wD, -w_i)  meet  cone(w_j : j != i)
// is intersected exactly; mu_i is the smallest admissible x over the
// extremal rays R of tau_i solving wD = x*w_i + y*R with x, y >= 0.
CoxZariski zariski_cox(const Vec2& wD, const std::vector<Vec2>& w);

}  // namespace fano216
