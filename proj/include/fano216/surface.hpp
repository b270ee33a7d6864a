#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fano216/matrix.hpp"
#include "fano216/rational.hpp"

namespace fano216 {

using DivisorClass = std::vector<Rational>;

// Intersection lattice of a surface: a curve-class basis with its symmetric
// Gram matrix, the negative curves eligible for Zariski negative parts, and
// (optionally) generators of the effective cone for feasibility checks.
struct SurfaceLattice {
  std::string name;
  std::vector<std::string> basis_names;
  Matrix<Rational> gram;
  std::vector<std::string> tracked_names;
  std::vector<DivisorClass> tracked;
  std::vector<DivisorClass> eff_generators;  // may be empty

  std::size_t rank() const { return basis_names.size(); }
  void validate() const;  // symmetry, sizes, nonzero tracked classes
};

struct ZariskiResult {
  DivisorClass positive;
  std::vector<std::pair<std::size_t, Rational>> negative;  // (tracked index, a_i > 0)
  std::set<std::size_t> support;
};

Rational intersect(const SurfaceLattice& lat, const DivisorClass& a, const DivisorClass& b);

bool is_nef(const SurfaceLattice& lat, const DivisorClass& d);

// Iterative decomposition: collect curves met negatively, solve the
// negative-definite system against the accumulated support, subtract,
// repeat until nef. Errors with "not pseudo-effective under supplied curve
// data" when the support Gram fails to be negative definite or the loop
// exceeds the tracked-curve count.
ZariskiResult zariski_surface(const SurfaceLattice& lat, const DivisorClass& d);

// Self-intersection of the positive part.
Rational volume(const SurfaceLattice& lat, const DivisorClass& d);

// All leading principal minors of the support Gram alternate in sign
// starting negative.
bool negative_definite(const SurfaceLattice& lat, const std::vector<std::size_t>& support);

}  // namespace fano216
