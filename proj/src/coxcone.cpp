#include "fano216/coxcone.hpp"

#include <optional>
#include <stdexcept>

namespace fano216 {

Vec2 primitive(const Vec2& v) {
  if (v.is_zero()) return {Rational(0), Rational(0)};
  mpz_class den_lcm = rational_lcm(v.x.den(), v.y.den());
  mpz_class nx = v.x.num() * (den_lcm / v.x.den());
  mpz_class ny = v.y.num() * (den_lcm / v.y.den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
  nx /= g;
  ny /= g;
  return {Rational(mpq_class(nx)), Rational(mpq_class(ny))};
}

Sector Sector::ray(const Vec2& r) {
  if (r.is_zero()) return zero();
  Sector s;
  s.kind_ = Kind::Ray;
  s.lo_ = primitive(r);
  return s;
}

Sector Sector::span(const Vec2& a, const Vec2& b) {
  Vec2 pa = primitive(a), pb = primitive(b);
  if (pa.is_zero()) return ray(pb);
  if (pb.is_zero()) return ray(pa);
  Rational c = cross(pa, pb);
  Sector s;
  if (c.is_zero()) {
    if (pa == pb) return ray(pa);
    s.kind_ = Kind::Line;  // opposite rays
    s.lo_ = pa;
    s.hi_ = pb;
    return s;
  }
  s.kind_ = Kind::Span;
  if (c > Rational(0)) {
    s.lo_ = pa;
    s.hi_ = pb;
  } else {
    s.lo_ = pb;
    s.hi_ = pa;
  }
  return s;
}

bool Sector::contains(const Vec2& v) const {
  if (v.is_zero()) return true;
  switch (kind_) {
    case Kind::Zero: return false;
    case Kind::Ray: return cross(lo_, v).is_zero() && dot(lo_, v) > Rational(0);
    case Kind::Line: return cross(lo_, v).is_zero();
    case Kind::Span:
      // valid because the span is strictly below 180 degrees
      return cross(lo_, v) >= Rational(0) && cross(v, hi_) >= Rational(0);
    default: return false;
  }
}

Sector Sector::hull(const std::vector<Vec2>& gens) {
  Sector s = zero();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Vec2 r = primitive(g);
    switch (s.kind_) {
      case Kind::Zero:
        s = ray(r);
        break;
      case Kind::Ray:
        s = span(s.lo_, r);
        break;
      case Kind::Line:
        if (!cross(s.lo_, r).is_zero())
          throw std::domain_error("Sector::hull: generators exceed a halfplane");
        break;
      case Kind::Span: {
        if (s.contains(r)) break;
        Sector up = span(s.lo_, r);
        if (up.kind() == Kind::Span && up.contains(s.hi_) && cross(s.lo_, r) > Rational(0)) {
          s = up;
          break;
        }
        Sector down = span(r, s.hi_);
        if (down.kind() == Kind::Span && down.contains(s.lo_) && cross(r, s.hi_) > Rational(0)) {
          s = down;
          break;
        }
        throw std::domain_error("Sector::hull: generators exceed a halfplane");
      }
    }
  }
  return s;
}

std::vector<Vec2> Sector::rays() const {
  switch (kind_) {
    case Kind::Zero: return {};
    case Kind::Ray: return {lo_};
    case Kind::Line: return {lo_, hi_};
    case Kind::Span: return {lo_, hi_};
  }
  return {};
}

std::string Sector::str() const {
  switch (kind_) {
    case Kind::Zero: return "{0}";
    case Kind::Ray: return "ray " + lo_.str();
    case Kind::Line: return "line " + lo_.str();
    case Kind::Span: return "sector [" + lo_.str() + ", " + hi_.str() + "]";
  }
  return "?";
}

Sector sector_intersect(const Sector& a, const Sector& b) {
  std::vector<Vec2> cand;
  for (const auto& r : a.rays())
    if (b.contains(r)) cand.push_back(r);
  for (const auto& r : b.rays())
    if (a.contains(r)) cand.push_back(r);
  // dedupe primitives
  std::vector<Vec2> uniq;
  for (const auto& r : cand) {
    bool seen = false;
    for (const auto& u : uniq)
      if (u == r) { seen = true; break; }
    if (!seen) uniq.push_back(r);
  }
  if (uniq.empty()) return Sector::zero();
  if (uniq.size() == 1) return Sector::ray(uniq[0]);
  if (uniq.size() == 2) return Sector::span(uniq[0], uniq[1]);
  // more than two distinct extremal candidates cannot happen for convex input
  throw std::logic_error("sector_intersect: too many extremal candidates");
}

namespace {

// Solve wD = x*w + y*r exactly; returns (x, y) or nullopt.
// Collinear w, r: picks the solution minimizing x subject to x, y >= 0.
std::optional<std::pair<Rational, Rational>> solve_two_ray(const Vec2& wD, const Vec2& w,
                                                           const Vec2& r) {
  Rational det = cross(w, r);
  if (!det.is_zero()) {
    Rational x = cross(wD, r) / det;
    Rational y = cross(w, wD) / det;
    return std::make_pair(x, y);
  }
  // w and r collinear; wD must be too
  if (!cross(w, wD).is_zero()) return std::nullopt;
  // write wD = lam * w, r = mu * w on the common line
  Rational lam = w.x.is_zero() ? wD.y / w.y : wD.x / w.x;
  Rational mu = w.x.is_zero() ? r.y / w.y : r.x / w.x;
  if (mu > Rational(0)) {
    // x = 0, y = lam/mu
    return std::make_pair(Rational(0), lam / mu);
  }
  // r opposite to w: smallest x >= lam at y = 0
  return std::make_pair(lam, Rational(0));
}

}  // namespace

CoxZariski zariski_cox(const Vec2& wD, const std::vector<Vec2>& w) {
  for (const auto& wi : w)
    if (wi.is_zero()) throw std::invalid_argument("zariski_cox: zero generator degree");
  Sector full = Sector::hull(w);
  if (!full.contains(wD)) throw std::domain_error("not effective");

  const std::size_t r = w.size();
  std::vector<Rational> mu(r, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Vec2> rest;
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) rest.push_back(w[j]);
    Sector cone2 = Sector::hull(rest);
    Sector cone1 = Sector::span(wD, Vec2{-w[i].x, -w[i].y});
    Sector tau = sector_intersect(cone1, cone2);

    std::vector<Rational> candidates;
    for (const auto& ray : tau.rays()) {
      auto sol = solve_two_ray(wD, w[i], ray);
      if (sol && sol->first >= Rational(0) && sol->second >= Rational(0))
        candidates.push_back(sol->first);
    }
    if (candidates.empty()) {
      // degenerate tau_i: run the same two-ray solve against the boundary of
      // cone(W \ {w_i}) itself
      for (const auto& ray : cone2.rays()) {
        auto sol = solve_two_ray(wD, w[i], ray);
        if (sol && sol->first >= Rational(0) && sol->second >= Rational(0))
          candidates.push_back(sol->first);
      }
    }
    if (candidates.empty())
      throw std::domain_error("zariski_cox: no admissible candidate for generator " +
                              std::to_string(i));
    Rational best = candidates[0];
    for (const auto& c : candidates)
      if (c < best) best = c;
    mu[i] = best;
  }

  // duplicate generator degrees are processed independently; their mu must agree
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (w[i] == w[j] && !(mu[i] == mu[j]))
        throw std::logic_error("zariski_cox: duplicate degrees with unequal mu");

  CoxZariski out;
  out.mu = mu;
  Vec2 wN{Rational(0), Rational(0)};
  for (std::size_t i = 0; i < r; ++i) wN = wN + mu[i] * w[i];
  out.wN = wN;
  out.wP = wD - wN;
  return out;
}

}  // namespace fano216
