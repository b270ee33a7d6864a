#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fano216/cyclotomic.hpp"
#include "fano216/rational.hpp"

namespace fano216 {

// Multivariate polynomial over Q with a fixed variable list and graded-lex
// ordered terms (the map comparator realizes the order), so equal
// polynomials have identical representations.
class MPoly {
 public:
  struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
  };
  using Terms = std::map<std::vector<int>, Rational, GradedLex>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t idx);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }
  void add_term(std::vector<int> exps, const Rational& coef);

  long total_degree() const;  // -1 for zero
  bool is_homogeneous(long degree) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& k, const MPoly& b);
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.t_ == b.t_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(long e) const;
  MPoly partial(std::size_t var) const;

  template <class T>
  T eval(const std::vector<T>& point) const {
    T acc = T::zero();
    for (const auto& [exps, coef] : t_) {
      T term = T::one();
      for (std::size_t i = 0; i < exps.size(); ++i)
        for (int k = 0; k < exps[i]; ++k) term = term * point[i];
      acc = acc + coef_cast<T>(coef) * term;
    }
    return acc;
  }

  // Substitutes images[i] for variable i; images live in a common ring.
  MPoly substitute(const std::vector<MPoly>& images) const;

  // Leading term in graded-lex order; polynomial must be nonzero.
  std::pair<std::vector<int>, Rational> leading_term() const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  template <class T>
  static T coef_cast(const Rational& r);

  std::size_t nvars_ = 0;
  Terms t_;
};

template <>
inline Rational MPoly::coef_cast<Rational>(const Rational& r) { return r; }
template <>
inline Cyclo MPoly::coef_cast<Cyclo>(const Rational& r) { return Cyclo(r); }

// Determinant via cofactor expansion along the first row; intended for the
// small symbolic matrices of the discriminant construction.
MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m);

}  // namespace fano216
