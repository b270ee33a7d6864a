#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fano216/rational.hpp"

namespace fano216 {

// Univariate polynomial with rational coefficients, dense, constant term
// first. The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim_(); }
  explicit Poly(Rational constant) : c_{std::move(constant)} { trim_(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim_(); }

  static Poly x() { return Poly({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  Poly antiderivative() const;
  Rational integrate(const Rational& lo, const Rational& hi) const;

  // p(a + b*x): composition with an affine map, exact.
  Poly compose_affine(const Rational& a, const Rational& b) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Division with remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

  std::string str(const std::string& var = "u") const;

 private:
  void trim_();
  std::vector<Rational> c_;
};

// Affine function c0 + cu*u + cv*v; the coefficient functions of chamber
// data are all of this shape.
struct AffineUV {
  Rational c0, cu, cv;

  AffineUV() = default;
  AffineUV(Rational k0, Rational ku, Rational kv)
      : c0(std::move(k0)), cu(std::move(ku)), cv(std::move(kv)) {}
  static AffineUV constant(const Rational& k) { return {k, Rational(0), Rational(0)}; }

  Rational eval(const Rational& u, const Rational& v) const { return c0 + cu * u + cv * v; }
  bool is_zero() const { return c0.is_zero() && cu.is_zero() && cv.is_zero(); }
  bool is_constant() const { return cu.is_zero() && cv.is_zero(); }

  AffineUV operator-() const { return {-c0, -cu, -cv}; }
  friend AffineUV operator+(const AffineUV& a, const AffineUV& b) {
    return {a.c0 + b.c0, a.cu + b.cu, a.cv + b.cv};
  }
  friend AffineUV operator-(const AffineUV& a, const AffineUV& b) {
    return {a.c0 - b.c0, a.cu - b.cu, a.cv - b.cv};
  }
  friend AffineUV operator*(const Rational& k, const AffineUV& a) {
    return {k * a.c0, k * a.cu, k * a.cv};
  }
  friend bool operator==(const AffineUV& a, const AffineUV& b) {
    return a.c0 == b.c0 && a.cu == b.cu && a.cv == b.cv;
  }
};

// Bivariate polynomial in (u, v), sparse map from (deg_u, deg_v).
class Bivar {
 public:
  Bivar() = default;
  explicit Bivar(const Rational& k) { add_term(0, 0, k); }
  explicit Bivar(const AffineUV& a) {
    add_term(0, 0, a.c0);
    add_term(1, 0, a.cu);
    add_term(0, 1, a.cv);
  }

  void add_term(int du, int dv, const Rational& coef);
  bool is_zero() const { return t_.empty(); }
  const std::map<std::pair<int, int>, Rational>& terms() const { return t_; }

  Rational eval(const Rational& u, const Rational& v) const;

  friend Bivar operator+(const Bivar& a, const Bivar& b);
  friend Bivar operator-(const Bivar& a, const Bivar& b);
  friend Bivar operator*(const Bivar& a, const Bivar& b);
  friend Bivar operator*(const Rational& k, const Bivar& b);
  Bivar& operator+=(const Bivar& o) { return *this = *this + o; }

  friend bool operator==(const Bivar& a, const Bivar& b) { return a.t_ == b.t_; }

  // Antiderivative in v, then substitution of an affine bound v = a + b*u,
  // giving the inner integral as a univariate polynomial in u.
  Poly integral_v_to(const Rational& a, const Rational& b) const;

  std::string str() const;

 private:
  std::map<std::pair<int, int>, Rational> t_;
};

inline Bivar operator*(const AffineUV& a, const AffineUV& b) { return Bivar(a) * Bivar(b); }

}  // namespace fano216
