#include "fano216/surface.hpp"

#include <algorithm>
#include <stdexcept>

#include "fano216/linprog.hpp"

namespace fano216 {

void SurfaceLattice::validate() const {
  const std::size_t n = rank();
  if (gram.rows() != n || gram.cols() != n)
    throw std::invalid_argument("SurfaceLattice: gram size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(gram(i, j) == gram(j, i)))
        throw std::invalid_argument("SurfaceLattice: gram not symmetric");
  for (const auto& c : tracked) {
    if (c.size() != n) throw std::invalid_argument("SurfaceLattice: tracked class rank");
    if (std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); }))
      throw std::invalid_argument("SurfaceLattice: zero tracked class");
  }
  for (const auto& c : eff_generators)
    if (c.size() != n) throw std::invalid_argument("SurfaceLattice: eff generator rank");
}

Rational intersect(const SurfaceLattice& lat, const DivisorClass& a, const DivisorClass& b) {
  const std::size_t n = lat.rank();
  if (a.size() != n || b.size() != n)
    throw std::invalid_argument("intersect: rank mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) acc += a[i] * lat.gram(i, j) * b[j];
  }
  return acc;
}

bool is_nef(const SurfaceLattice& lat, const DivisorClass& d) {
  for (const auto& c : lat.tracked)
    if (intersect(lat, d, c) < Rational(0)) return false;
  return true;
}

bool negative_definite(const SurfaceLattice& lat, const std::vector<std::size_t>& support) {
  const std::size_t m = support.size();
  Matrix<Rational> g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      g(i, j) = intersect(lat, lat.tracked[support[i]], lat.tracked[support[j]]);
  // leading principal minors of -G must all be positive
  for (std::size_t k = 1; k <= m; ++k) {
    Matrix<Rational> sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = -g(i, j);
    if (!(matrix_det(sub) > Rational(0))) return false;
  }
  return true;
}

ZariskiResult zariski_surface(const SurfaceLattice& lat, const DivisorClass& d) {
  const std::size_t n = lat.rank();
  if (d.size() != n) throw std::invalid_argument("zariski_surface: rank mismatch");

  // When effective-cone data is present, certify pseudo-effectivity up front.
  if (!lat.eff_generators.empty() && !cone_member(lat.eff_generators, d))
    throw std::domain_error("not pseudo-effective under supplied curve data");

  std::set<std::size_t> support;
  DivisorClass p = d;
  std::vector<Rational> coeffs;

  for (std::size_t round = 0; round <= lat.tracked.size(); ++round) {
    bool grew = false;
    for (std::size_t k = 0; k < lat.tracked.size(); ++k) {
      if (support.count(k)) continue;
      if (intersect(lat, p, lat.tracked[k]) < Rational(0)) {
        support.insert(k);
        grew = true;
      }
    }
    if (!grew) {
      // nothing met negatively; the current p must be nef
      break;
    }
    std::vector<std::size_t> sup(support.begin(), support.end());
    if (!negative_definite(lat, sup))
      throw std::domain_error("not pseudo-effective under supplied curve data");
    const std::size_t m = sup.size();
    Matrix<Rational> g(m, m);
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j)
        g(i, j) = intersect(lat, lat.tracked[sup[i]], lat.tracked[sup[j]]);
      rhs[i] = intersect(lat, d, lat.tracked[sup[i]]);
    }
    coeffs = matrix_solve(g, rhs);
    for (std::size_t i = 0; i < m; ++i)
      if (!(coeffs[i] > Rational(0)))
        throw std::domain_error("zariski_surface: nonpositive negative-part coefficient; "
                                "inconsistent curve data");
    p = d;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t t = 0; t < n; ++t) p[t] -= coeffs[i] * lat.tracked[sup[i]][t];
  }

  if (!is_nef(lat, p))
    throw std::domain_error("not pseudo-effective under supplied curve data");

  ZariskiResult res;
  res.positive = p;
  res.support = support;
  std::vector<std::size_t> sup(support.begin(), support.end());
  for (std::size_t i = 0; i < sup.size(); ++i) res.negative.emplace_back(sup[i], coeffs[i]);
  return res;
}

Rational volume(const SurfaceLattice& lat, const DivisorClass& d) {
  ZariskiResult z = zariski_surface(lat, d);
  return intersect(lat, z.positive, z.positive);
}

}  // namespace fano216
