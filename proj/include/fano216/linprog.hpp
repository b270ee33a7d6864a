#pragma once

#include <optional>
#include <vector>

#include "fano216/rational.hpp"

namespace fano216 {

// Exact rational simplex (Bland's rule), sized for the small cone problems
// of this project: a handful of rows, a few dozen columns.
//
// Solves max c.x subject to A x = b, x >= 0.
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded } status;
  Rational objective;
  std::vector<Rational> x;
};

LpResult lp_maximize(const std::vector<std::vector<Rational>>& a,
                     const std::vector<Rational>& b,
                     const std::vector<Rational>& c);

// Is `target` a nonnegative rational combination of `generators`?
bool cone_member(const std::vector<std::vector<Rational>>& generators,
                 const std::vector<Rational>& target);

// Largest t >= 0 with base + t*dir still in cone(generators).
// nullopt if base itself is outside the cone; throws std::domain_error
// when the threshold is unbounded.
std::optional<Rational> cone_exit_threshold(const std::vector<std::vector<Rational>>& generators,
                                            const std::vector<Rational>& base,
                                            const std::vector<Rational>& dir);

}  // namespace fano216
