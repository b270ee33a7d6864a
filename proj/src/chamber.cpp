#include "fano216/chamber.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fano216/linprog.hpp"
#include "fano216/matrix.hpp"

namespace fano216 {

Rational polygon_area2(const Polygon& p) {
  Rational acc(0);
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [x1, y1] = p[i];
    const auto& [x2, y2] = p[(i + 1) % n];
    acc += x1 * y2 - x2 * y1;
  }
  return acc;
}

Point2 polygon_centroid(const Polygon& p) {
  Rational sx(0), sy(0);
  for (const auto& [x, y] : p) {
    sx += x;
    sy += y;
  }
  Rational n(static_cast<long>(p.size()));
  return {sx / n, sy / n};
}

std::pair<Polygon, Polygon> split_polygon(const Polygon& poly, const AffineUV& f) {
  Polygon neg, pos;
  const std::size_t n = poly.size();
  std::vector<Rational> val(n);
  for (std::size_t i = 0; i < n; ++i) val[i] = f.eval(poly[i].first, poly[i].second);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    const Rational& vp = val[i];
    const Rational& vq = val[(i + 1) % n];
    if (vp <= Rational(0)) neg.push_back(p);
    if (vp >= Rational(0)) pos.push_back(p);
    if ((vp > Rational(0) && vq < Rational(0)) || (vp < Rational(0) && vq > Rational(0))) {
      Rational t = vp / (vp - vq);
      Point2 cut{p.first + t * (q.first - p.first), p.second + t * (q.second - p.second)};
      neg.push_back(cut);
      pos.push_back(cut);
    }
  }
  auto dedupe = [](Polygon& g) {
    Polygon out;
    for (const auto& pt : g) {
      if (out.empty() || !(out.back() == pt)) out.push_back(pt);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    g = std::move(out);
  };
  dedupe(neg);
  dedupe(pos);
  return {std::move(neg), std::move(pos)};
}

Rational integrate_polygon(const Bivar& f, const Polygon& poly) {
  if (poly.size() < 3) return Rational(0);
  std::vector<Rational> us;
  for (const auto& [u, v] : poly) us.push_back(u);
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());

  Rational total(0);
  const std::size_t n = poly.size();
  for (std::size_t s = 0; s + 1 < us.size(); ++s) {
    const Rational& ua = us[s];
    const Rational& ub = us[s + 1];
    Rational umid = (ua + ub) / Rational(2);
    // find the two edges spanning this strip
    struct Edge {
      Rational a, b;  // v = a + b*u
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = poly[i];
      const auto& q = poly[(i + 1) % n];
      if (p.first == q.first) continue;
      Rational lo = std::min(p.first, q.first), hi = std::max(p.first, q.first);
      if (lo <= ua && hi >= ub) {
        Rational slope = (q.second - p.second) / (q.first - p.first);
        edges.push_back({p.second - slope * p.first, slope});
      }
    }
    if (edges.size() < 2) continue;  // degenerate sliver
    if (edges.size() > 2)
      throw std::logic_error("integrate_polygon: polygon not convex");
    Rational v0 = edges[0].a + edges[0].b * umid;
    Rational v1 = edges[1].a + edges[1].b * umid;
    const Edge& low = v0 <= v1 ? edges[0] : edges[1];
    const Edge& up = v0 <= v1 ? edges[1] : edges[0];
    Poly inner = f.integral_v_to(up.a, up.b) - f.integral_v_to(low.a, low.b);
    total += inner.integrate(ua, ub);
  }
  return total;
}

std::vector<Rational> RestrictionPiece::class_at(const Rational& u) const {
  std::vector<Rational> out(b_class.size());
  for (std::size_t i = 0; i < b_class.size(); ++i) out[i] = b_class[i].eval(u);
  return out;
}

Rational pseff_threshold_at(const SurfaceLattice& lat, const std::vector<Rational>& b_at_u,
                            const DivisorClass& curve) {
  if (lat.eff_generators.empty())
    throw std::domain_error("pseff_threshold_at: missing effective-cone data");
  std::vector<Rational> neg_curve(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) neg_curve[i] = -curve[i];
  auto t = cone_exit_threshold(lat.eff_generators, b_at_u, neg_curve);
  if (!t) throw std::domain_error("pseff_threshold_at: class not effective");
  return *t;
}

namespace {

class ThresholdScanner {
 public:
  ThresholdScanner(const SurfaceLattice& lat, const RestrictionPiece& piece,
                   const DivisorClass& curve)
      : lat_(lat), piece_(piece), curve_(curve) {}

  Rational t(const Rational& u) {
    auto it = cache_.find(u);
    if (it != cache_.end()) return it->second;
    Rational val = pseff_threshold_at(lat_, piece_.class_at(u), curve_);
    cache_.emplace(u, val);
    return val;
  }

  // t is concave on the piece: the chord test at one interior point
  // certifies affineness on the whole interval.
  bool chord_certified(const Rational& a, const Rational& b, Rational* slope_out) {
    Rational ta = t(a), tb = t(b);
    Rational slope = (tb - ta) / (b - a);
    Rational m = (a + b) / Rational(2);
    if (!(t(m) == ta + slope * (m - a))) return false;
    if (slope_out) *slope_out = slope;
    return true;
  }

  void pieces(const Rational& a, const Rational& b, int depth,
              std::vector<ThresholdPiece>& out) {
    if (depth > 32) throw std::logic_error("threshold_pieces: recursion cap exceeded");
    Rational slope;
    if (chord_certified(a, b, &slope)) {
      out.push_back({a, b, t(a) - slope * a, slope});
      return;
    }
    // locate the first and last affine pieces by shrinking windows
    Rational left_a, left_b, right_a, right_b;
    Rational h = (b - a) / Rational(4);
    while (true) {
      if (chord_certified(a, a + h, &slope)) {
        left_b = slope;
        left_a = t(a) - slope * a;
        break;
      }
      h = h / Rational(2);
      if (h.num() != 0 && mpz_sizeinbase(h.den().get_mpz_t(), 2) > 64)
        throw std::logic_error("threshold_pieces: no left piece found");
    }
    h = (b - a) / Rational(4);
    while (true) {
      if (chord_certified(b - h, b, &slope)) {
        right_b = slope;
        right_a = t(b) - slope * b;
        break;
      }
      h = h / Rational(2);
      if (h.num() != 0 && mpz_sizeinbase(h.den().get_mpz_t(), 2) > 64)
        throw std::logic_error("threshold_pieces: no right piece found");
    }
    if (left_b == right_b)
      throw std::logic_error("threshold_pieces: parallel end pieces cannot meet");
    Rational ustar = (right_a - left_a) / (left_b - right_b);
    if (!(ustar > a && ustar < b))
      throw std::logic_error("threshold_pieces: breakpoint outside interval");
    pieces(a, ustar, depth + 1, out);
    pieces(ustar, b, depth + 1, out);
  }

 private:
  const SurfaceLattice& lat_;
  const RestrictionPiece& piece_;
  const DivisorClass& curve_;
  std::map<Rational, Rational> cache_;
};

}  // namespace

std::vector<ThresholdPiece> threshold_pieces(const SurfaceLattice& lat,
                                             const RestrictionPiece& piece,
                                             const DivisorClass& curve) {
  ThresholdScanner scan(lat, piece, curve);
  std::vector<ThresholdPiece> out;
  scan.pieces(piece.u_lo, piece.u_hi, 0, out);
  return out;
}

namespace {

// symbolic chamber data for one support set
struct SupportData {
  std::vector<std::size_t> support;
  std::vector<AffineUV> n_coeffs;
  std::vector<AffineUV> p_class;
  std::vector<AffineUV> p_dot_tracked;
  AffineUV p_dot_curve;
  std::vector<AffineUV> walls;  // own sign conditions
};

AffineUV intersect_affine(const SurfaceLattice& lat, const std::vector<AffineUV>& a,
                          const DivisorClass& c) {
  AffineUV acc;
  const std::size_t n = lat.rank();
  for (std::size_t i = 0; i < n; ++i) {
    Rational gi(0);
    for (std::size_t j = 0; j < n; ++j) gi += lat.gram(i, j) * c[j];
    if (gi.is_zero()) continue;
    acc = acc + gi * a[i];
  }
  return acc;
}

SupportData build_support_data(const SurfaceLattice& lat, const RestrictionPiece& piece,
                               const DivisorClass& curve,
                               const std::vector<std::size_t>& support) {
  const std::size_t rank = lat.rank();
  // D(u,v) = B(u) - v*curve as affine class vector
  std::vector<AffineUV> d(rank);
  for (std::size_t i = 0; i < rank; ++i)
    d[i] = AffineUV{piece.b_class[i].coeff(0), piece.b_class[i].coeff(1), -curve[i]};

  SupportData out;
  out.support = support;
  const std::size_t m = support.size();
  if (m > 0) {
    Matrix<Rational> g(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        g(i, j) = intersect(lat, lat.tracked[support[i]], lat.tracked[support[j]]);
    // solve the constant matrix against the three affine RHS components
    std::vector<Rational> rhs0(m), rhsu(m), rhsv(m);
    for (std::size_t i = 0; i < m; ++i) {
      AffineUV r = intersect_affine(lat, d, lat.tracked[support[i]]);
      rhs0[i] = r.c0;
      rhsu[i] = r.cu;
      rhsv[i] = r.cv;
    }
    auto a0 = matrix_solve(g, rhs0);
    auto au = matrix_solve(g, rhsu);
    auto av = matrix_solve(g, rhsv);
    out.n_coeffs.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.n_coeffs[i] = AffineUV{a0[i], au[i], av[i]};
  }
  out.p_class = d;
  for (std::size_t i = 0; i < m; ++i) {
    const AffineUV& a = out.n_coeffs[i];
    for (std::size_t t = 0; t < rank; ++t) {
      const Rational& ct = lat.tracked[support[i]][t];
      if (ct.is_zero()) continue;
      out.p_class[t] = out.p_class[t] - ct * a;
    }
  }

  out.p_dot_tracked.resize(lat.tracked.size());
  for (std::size_t j = 0; j < lat.tracked.size(); ++j)
    out.p_dot_tracked[j] = intersect_affine(lat, out.p_class, lat.tracked[j]);
  out.p_dot_curve = intersect_affine(lat, out.p_class, curve);

  for (const auto& nc : out.n_coeffs)
    if (!nc.is_constant() || !nc.c0.is_zero()) out.walls.push_back(nc);
  for (const auto& pc : out.p_dot_tracked)
    if (!pc.is_zero()) out.walls.push_back(pc);
  return out;
}

// canonical primitive form for wall dedup
std::array<Rational, 3> wall_key(const AffineUV& f) {
  Rational lead = !f.cv.is_zero() ? f.cv : (!f.cu.is_zero() ? f.cu : f.c0);
  if (lead.is_zero()) return {Rational(0), Rational(0), Rational(0)};
  Rational inv = lead.inverse();
  if (inv < Rational(0)) inv = -inv;
  return {inv * f.c0, inv * f.cu, inv * f.cv};
}

Bivar square_bivar(const SurfaceLattice& lat, const std::vector<AffineUV>& p) {
  Bivar acc;
  const std::size_t n = lat.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (lat.gram(i, j).is_zero()) continue;
      acc += lat.gram(i, j) * (p[i] * p[j]);
    }
  return acc;
}

std::string point_str(const Point2& p) {
  return "(" + p.first.str() + ", " + p.second.str() + ")";
}

}  // namespace

ChamberedZariski chambered_zariski(const SurfaceLattice& lat,
                                   const std::vector<RestrictionPiece>& pieces,
                                   const DivisorClass& curve) {
  ChamberedZariski out;
  using Key = std::vector<std::size_t>;
  std::map<Key, SupportData> support_cache;
  std::set<std::array<Rational, 3>> wall_keys;
  std::vector<AffineUV> walls;

  auto pointwise = [&](const RestrictionPiece& piece, const Rational& u, const Rational& v) {
    DivisorClass d = piece.class_at(u);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= v * curve[i];
    return zariski_surface(lat, d);
  };

  auto learn_support = [&](const RestrictionPiece& piece, const Key& key) -> const SupportData& {
    auto it = support_cache.find(key);
    if (it != support_cache.end()) return it->second;
    SupportData data = build_support_data(lat, piece, curve, key);
    for (const auto& w : data.walls) {
      auto k = wall_key(w);
      if (wall_keys.insert(k).second) walls.push_back(w);
    }
    return support_cache.emplace(key, std::move(data)).first->second;
  };

  for (std::size_t piece_idx = 0; piece_idx < pieces.size(); ++piece_idx) {
    const auto& piece = pieces[piece_idx];
    auto tp = threshold_pieces(lat, piece, curve);
    for (const auto& t : tp) out.t_pieces.push_back(t);

    // per-piece support data must be rebuilt: B(u) differs between pieces
    support_cache.clear();
    wall_keys.clear();
    walls.clear();

    for (const auto& t : tp) {
      Polygon domain;
      domain.push_back({t.u_lo, Rational(0)});
      domain.push_back({t.u_hi, Rational(0)});
      if (!t.at(t.u_hi).is_zero()) domain.push_back({t.u_hi, t.at(t.u_hi)});
      if (!t.at(t.u_lo).is_zero()) domain.push_back({t.u_lo, t.at(t.u_lo)});
      if (domain.size() < 3) continue;

      // seed the support discovery on an interior grid
      const int grid = 4;
      for (int gi = 1; gi <= grid; ++gi) {
        for (int gj = 1; gj <= grid; ++gj) {
          Rational fu(gi, grid + 1), fv(gj, grid + 1);
          Rational u = t.u_lo + fu * (t.u_hi - t.u_lo);
          Rational v = fv * t.at(u);
          if (v.is_zero()) continue;
          auto z = pointwise(piece, u, v);
          learn_support(piece, Key(z.support.begin(), z.support.end()));
        }
      }

      // split by walls until every cell's own support data is sign-constant
      std::vector<Polygon> cells{domain};
      std::size_t processed_walls = 0;
      for (int round = 0; round < 64; ++round) {
        // apply any new walls
        while (processed_walls < walls.size()) {
          const AffineUV& w = walls[processed_walls++];
          std::vector<Polygon> next;
          for (const auto& cell : cells) {
            auto [negp, posp] = split_polygon(cell, w);
            if (negp.size() >= 3 && !polygon_area2(negp).is_zero()) next.push_back(negp);
            if (posp.size() >= 3 && !polygon_area2(posp).is_zero()) next.push_back(posp);
          }
          cells = std::move(next);
        }
        // probe each cell; discover any unseen support sets
        bool new_support = false;
        for (const auto& cell : cells) {
          Point2 c = polygon_centroid(cell);
          auto z = pointwise(piece, c.first, c.second);
          Key key(z.support.begin(), z.support.end());
          if (!support_cache.count(key)) {
            learn_support(piece, key);
            new_support = true;
          }
        }
        if (!new_support && processed_walls == walls.size()) break;
      }
      if (processed_walls != walls.size())
        throw std::logic_error("chambered_zariski: wall refinement did not stabilize");

      // validate and emit chambers
      for (const auto& cell : cells) {
        Point2 c = polygon_centroid(cell);
        auto z = pointwise(piece, c.first, c.second);
        Key key(z.support.begin(), z.support.end());
        const SupportData& data = learn_support(piece, key);

        // exact agreement of symbolic and pointwise data at the witness
        for (std::size_t i = 0; i < data.support.size(); ++i) {
          Rational sym = data.n_coeffs[i].eval(c.first, c.second);
          Rational pw(0);
          for (const auto& [idx, coef] : z.negative)
            if (idx == data.support[i]) pw = coef;
          if (!(sym == pw))
            throw std::logic_error("chambered_zariski: validation failure at " + point_str(c));
        }
        for (std::size_t tcl = 0; tcl < lat.rank(); ++tcl) {
          if (!(data.p_class[tcl].eval(c.first, c.second) == z.positive[tcl]))
            throw std::logic_error("chambered_zariski: validation failure at " + point_str(c));
        }

        Chamber ch;
        ch.polygon = cell;
        ch.piece_index = piece_idx;
        ch.support = data.support;
        ch.n_coeffs = data.n_coeffs;
        ch.p_class = data.p_class;
        ch.p_squared = square_bivar(lat, data.p_class);
        ch.p_dot_tracked = data.p_dot_tracked;
        ch.p_dot_curve = data.p_dot_curve;
        ch.witness = c;
        out.chambers.push_back(std::move(ch));
      }
    }
  }
  return out;
}

std::size_t certify_chambers(const SurfaceLattice& lat, const ChamberedZariski& cz,
                             const DivisorClass& curve, std::size_t points_per_chamber,
                             unsigned seed, Exec mode) {
  struct Task {
    std::size_t chamber;
    Point2 pt;
  };
  std::vector<Task> tasks;
  // deterministic LCG over rational barycentric weights
  unsigned long long state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 1000) + 1;  // 1..1000
  };
  for (std::size_t ci = 0; ci < cz.chambers.size(); ++ci) {
    const Polygon& poly = cz.chambers[ci].polygon;
    for (std::size_t k = 0; k < points_per_chamber; ++k) {
      // random positive rational convex combination of the vertices
      std::vector<Rational> w(poly.size());
      Rational tot(0);
      for (auto& wi : w) {
        wi = Rational(next());
        tot += wi;
      }
      Rational u(0), v(0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        u += w[i] / tot * poly[i].first;
        v += w[i] / tot * poly[i].second;
      }
      tasks.push_back({ci, {u, v}});
    }
  }

  auto check = [&](std::size_t idx) -> int {
    const Task& task = tasks[idx];
    const Chamber& ch = cz.chambers[task.chamber];
    DivisorClass d(lat.rank());
    // reconstruct D = P + sum a_i C_i from the symbolic data, then compare
    // against the pointwise decomposition of that class
    for (std::size_t t = 0; t < lat.rank(); ++t) {
      d[t] = ch.p_class[t].eval(task.pt.first, task.pt.second);
      for (std::size_t i = 0; i < ch.support.size(); ++i)
        d[t] += ch.n_coeffs[i].eval(task.pt.first, task.pt.second) *
                lat.tracked[ch.support[i]][t];
    }
    auto z = zariski_surface(lat, d);
    for (std::size_t t = 0; t < lat.rank(); ++t)
      if (!(z.positive[t] == ch.p_class[t].eval(task.pt.first, task.pt.second))) return 0;
    // support agreement up to zero coefficients on the chamber boundary
    for (const auto& [idx2, coef] : z.negative) {
      bool found = false;
      for (std::size_t i = 0; i < ch.support.size(); ++i)
        if (ch.support[i] == idx2) {
          if (!(ch.n_coeffs[i].eval(task.pt.first, task.pt.second) == coef)) return 0;
          found = true;
        }
      if (!found && !coef.is_zero()) return 0;
    }
    Rational p2 = ch.p_squared.eval(task.pt.first, task.pt.second);
    if (!(p2 == intersect(lat, z.positive, z.positive))) return 0;
    Rational pc = ch.p_dot_curve.eval(task.pt.first, task.pt.second);
    if (!(pc == intersect(lat, z.positive, curve))) return 0;
    return 1;
  };

  auto results = map_indexed<int>(tasks.size(), mode, check);
  for (std::size_t i = 0; i < results.size(); ++i)
    if (!results[i])
      throw std::logic_error("certify_chambers: mismatch at " + point_str(tasks[i].pt));
  return tasks.size();
}

Rational integrate_p2(const ChamberedZariski& cz) {
  Rational total(0);
  for (const auto& ch : cz.chambers) total += integrate_polygon(ch.p_squared, ch.polygon);
  return total;
}

namespace {

Poly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
  Poly acc;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Poly term(pts[i].second);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      Rational denom = pts[i].first - pts[j].first;
      term = term * Poly({-pts[j].first / denom, denom.inverse()});
    }
    acc += term;
  }
  return acc;
}

}  // namespace

Rational integrate_p2_by_columns(const SurfaceLattice& lat,
                                 const std::vector<RestrictionPiece>& pieces,
                                 const DivisorClass& curve, const ChamberedZariski& cz) {
  // column integral g(u) = int_0^{t(u)} P(u,v)^2 dv computed from scratch at
  // a fixed u: the 1D decomposition in v is re-derived at the midpoint of
  // each candidate interval, and the interval splits at the exact roots of
  // the derived coefficient functions until the regime is sign-constant.
  struct Regime {
    std::vector<std::size_t> support;
    std::vector<Poly> a;   // negative-part coefficients, affine in v
    std::vector<Poly> pv;  // positive part class, affine in v
  };
  auto derive = [&](const DivisorClass& b0, const Rational& vmid) -> Regime {
    DivisorClass d = b0;
    for (std::size_t t = 0; t < d.size(); ++t) d[t] -= vmid * curve[t];
    auto z = zariski_surface(lat, d);
    Regime reg;
    reg.support.assign(z.support.begin(), z.support.end());
    const std::size_t m = reg.support.size();
    std::vector<Rational> a0(m), a1(m);
    if (m) {
      Matrix<Rational> g(m, m);
      std::vector<Rational> r0(m), r1(m);
      for (std::size_t ii = 0; ii < m; ++ii) {
        for (std::size_t jj = 0; jj < m; ++jj)
          g(ii, jj) = intersect(lat, lat.tracked[reg.support[ii]], lat.tracked[reg.support[jj]]);
        r0[ii] = intersect(lat, b0, lat.tracked[reg.support[ii]]);
        r1[ii] = -intersect(lat, curve, lat.tracked[reg.support[ii]]);
      }
      a0 = matrix_solve(g, r0);
      a1 = matrix_solve(g, r1);
    }
    reg.a.resize(m);
    for (std::size_t ii = 0; ii < m; ++ii) reg.a[ii] = Poly({a0[ii], a1[ii]});
    reg.pv.resize(lat.rank());
    for (std::size_t t = 0; t < lat.rank(); ++t) {
      reg.pv[t] = Poly({b0[t], -curve[t]});
      for (std::size_t ii = 0; ii < m; ++ii)
        reg.pv[t] -= Poly({a0[ii] * lat.tracked[reg.support[ii]][t],
                           a1[ii] * lat.tracked[reg.support[ii]][t]});
    }
    return reg;
  };
  // first root of any of the regime's own sign functions strictly inside (va, vb)
  auto first_inner_root = [&](const Regime& reg, const Rational& va,
                              const Rational& vb) -> std::optional<Rational> {
    std::optional<Rational> best;
    auto consider = [&](const Poly& f) {
      if (f.degree() != 1) return;
      Rational root = -f.coeff(0) / f.coeff(1);
      if (root > va && root < vb && (!best || root < *best)) best = root;
    };
    for (const auto& f : reg.a) consider(f);
    for (const auto& c : lat.tracked) {
      Poly pc;
      for (std::size_t s = 0; s < lat.rank(); ++s) {
        Rational gi(0);
        for (std::size_t t = 0; t < lat.rank(); ++t) gi += lat.gram(s, t) * c[t];
        if (!gi.is_zero()) pc += gi * reg.pv[s];
      }
      consider(pc);
    }
    return best;
  };
  std::function<Rational(const DivisorClass&, const Rational&, const Rational&, int)>
      scan = [&](const DivisorClass& b0, const Rational& va, const Rational& vb,
                 int depth) -> Rational {
    if (depth > 64) throw std::logic_error("integrate_p2_by_columns: split cap exceeded");
    Rational vm = (va + vb) / Rational(2);
    Regime reg = derive(b0, vm);
    if (auto root = first_inner_root(reg, va, vb))
      return scan(b0, va, *root, depth + 1) + scan(b0, *root, vb, depth + 1);
    Poly p2;
    for (std::size_t s = 0; s < lat.rank(); ++s)
      for (std::size_t t = 0; t < lat.rank(); ++t) {
        if (lat.gram(s, t).is_zero()) continue;
        p2 += lat.gram(s, t) * (reg.pv[s] * reg.pv[t]);
      }
    return p2.integrate(va, vb);
  };
  auto column = [&](const RestrictionPiece& piece, const Rational& u) -> Rational {
    Rational tu = pseff_threshold_at(lat, piece.class_at(u), curve);
    if (tu.is_zero()) return Rational(0);
    return scan(piece.class_at(u), Rational(0), tu, 0);
  };

  // u-breakpoints: all chamber vertex u-coordinates
  Rational total(0);
  for (const auto& piece : pieces) {
    std::vector<Rational> ubreaks{piece.u_lo, piece.u_hi};
    for (const auto& ch : cz.chambers)
      for (const auto& [u, v] : ch.polygon)
        if (u > piece.u_lo && u < piece.u_hi) ubreaks.push_back(u);
    std::sort(ubreaks.begin(), ubreaks.end());
    ubreaks.erase(std::unique(ubreaks.begin(), ubreaks.end()), ubreaks.end());
    for (std::size_t i = 0; i + 1 < ubreaks.size(); ++i) {
      Rational a = ubreaks[i], b = ubreaks[i + 1];
      // g(u) is a polynomial of degree <= 3 here; interpolate on 5 points,
      // verify on 2 more
      std::vector<std::pair<Rational, Rational>> pts;
      for (int k = 1; k <= 5; ++k) {
        Rational x = a + Rational(k, 6) * (b - a);
        pts.emplace_back(x, column(piece, x));
      }
      Poly g = lagrange_interpolate(pts);
      for (const Rational& frac : {Rational(1, 7), Rational(5, 7)}) {
        Rational x = a + frac * (b - a);
        if (!(g.eval(x) == column(piece, x)))
          throw std::logic_error("integrate_p2_by_columns: reconstruction mismatch");
      }
      total += g.integrate(a, b);
    }
  }
  return total;
}

}  // namespace fano216
