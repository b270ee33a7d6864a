#include "fano216/mpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fano216 {

bool MPoly::GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t idx) {
  if (idx >= nvars) throw std::invalid_argument("MPoly::variable: index out of range");
  MPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e[idx] = 1;
  p.add_term(std::move(e), Rational(1));
  return p;
}

void MPoly::add_term(std::vector<int> exps, const Rational& coef) {
  if (exps.size() != nvars_) throw std::invalid_argument("MPoly::add_term: arity");
  if (coef.is_zero()) return;
  auto it = t_.find(exps);
  if (it == t_.end()) {
    t_.emplace(std::move(exps), coef);
  } else {
    it->second += coef;
    if (it->second.is_zero()) t_.erase(it);
  }
}

long MPoly::total_degree() const {
  if (t_.empty()) return -1;
  const auto& e = t_.rbegin()->first;  // graded-lex: last term has max degree
  return std::accumulate(e.begin(), e.end(), 0L);
}

bool MPoly::is_homogeneous(long degree) const {
  for (const auto& [e, c] : t_)
    if (std::accumulate(e.begin(), e.end(), 0L) != degree) return false;
  return true;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
  MPoly r = a;
  for (const auto& [e, c] : b.t_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
  MPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      std::vector<int> e(a.nvars_);
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

MPoly operator*(const Rational& k, const MPoly& b) {
  MPoly r(b.nvars_);
  if (k.is_zero()) return r;
  for (const auto& [e, c] : b.t_) r.t_.emplace(e, k * c);
  return r;
}

MPoly MPoly::pow(long e) const {
  if (e < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly acc = constant(nvars_, Rational(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MPoly MPoly::partial(std::size_t var) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : t_) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    --d[var];
    r.add_term(std::move(d), Rational(e[var]) * c);
  }
  return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("MPoly::substitute: arity");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  MPoly acc(target);
  for (const auto& [e, c] : t_) {
    MPoly term = MPoly::constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    acc += term;
  }
  return acc;
}

std::pair<std::vector<int>, Rational> MPoly::leading_term() const {
  if (t_.empty()) throw std::domain_error("MPoly::leading_term: zero polynomial");
  auto it = t_.rbegin();
  return {it->first, it->second};
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (it->second != Rational(1) ||
        std::accumulate(it->first.begin(), it->first.end(), 0) == 0) {
      os << it->second.str();
      printed = true;
    }
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (printed) os << "*";
      os << names[i];
      if (it->first[i] > 1) os << "^" << it->first[i];
      printed = true;
    }
  }
  return os.str();
}

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("mpoly_det: not square");
  if (n == 0) throw std::invalid_argument("mpoly_det: empty");
  if (n == 1) return m[0][0];
  std::size_t vars = m[0][0].nvars();
  MPoly det(vars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MPoly cof = m[0][j] * mpoly_det(minor);
    det = (j % 2 == 0) ? det + cof : det - cof;
  }
  return det;
}

}  // namespace fano216
