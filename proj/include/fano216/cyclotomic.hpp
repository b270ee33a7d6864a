#pragma once

#include <string>
#include <vector>

#include "fano216/rational.hpp"

namespace fano216 {

long euler_phi(long n);

// Coefficients of the n-th cyclotomic polynomial, constant term first,
// monic of degree phi(n). Computed once and cached.
const std::vector<Rational>& cyclotomic_poly(long n);

// Element of Q(zeta_n), stored as the canonical residue modulo the n-th
// cyclotomic polynomial: a coefficient vector of length phi(n).
//
// Mixed-conductor arithmetic promotes both operands into Q(zeta_lcm);
// lcm of conductors above 120 is rejected.
class Cyclo {
 public:
  Cyclo() : n_(1), c_(1, Rational(0)) {}
  explicit Cyclo(const Rational& r) : n_(1), c_(1, r) {}
  Cyclo(long n, std::vector<Rational> coeffs);

  // zeta_n^k
  static Cyclo zeta(long n, long k = 1);

  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(Rational(1)); }

  long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws unless the element actually lies in Q.
  Rational to_rational() const;

  Cyclo promoted(long m) const;  // embed into Q(zeta_m); m must be a multiple of n

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  Cyclo inverse() const;
  Cyclo pow(long e) const;

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
  // Deterministic total order on (conductor, coefficients); not a field order.
  friend bool operator<(const Cyclo& a, const Cyclo& b);

  // Order as a root of unity, or 0 if the element is not one (search cap 240).
  long root_of_unity_order() const;

  std::string str() const;  // e.g. "1/2 + 3*z20^7" with z = zeta_conductor

  // wire form: {"conductor": n, "coeffs": ["p/q", ...]}
  std::string json_str() const;

 private:
  void reduce_();
  long n_;
  std::vector<Rational> c_;
};

Cyclo operator*(const Rational& a, const Cyclo& b);

// Promote a and b into the smallest common cyclotomic field.
// Throws "incompatible fields" if lcm of conductors exceeds 120.
std::pair<Cyclo, Cyclo> promote_pair(const Cyclo& a, const Cyclo& b);

// sqrt(2) = z8 + z8^7, sqrt(3) = z12 + z12^11, sqrt(5) = 2(z5 + z5^4) + 1.
Cyclo cyclo_sqrt(long n);

// Parses a small expression grammar over cyclotomic scalars:
//   integers, rationals p/q, i, zN (= zeta_N), sqrtN for N in {2,3,5},
//   + - * / ^ and parentheses.
Cyclo parse_cyclo(const std::string& text);

}  // namespace fano216
