#include "fano216/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace fano216 {

void Poly::trim_() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
  if (c_.empty()) return Poly();
  std::vector<Rational> a(c_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    a[i + 1] = c_[i] / Rational(static_cast<long>(i) + 1);
  return Poly(std::move(a));
}

Rational Poly::integrate(const Rational& lo, const Rational& hi) const {
  Poly F = antiderivative();
  return F.eval(hi) - F.eval(lo);
}

Poly Poly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner over the affine argument
  Poly lin({a, b});
  Poly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly operator*(const Rational& a, const Poly& b) {
  std::vector<Rational> r(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = a * b.c_[i];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("Poly::divmod: zero divisor");
  std::vector<Rational> rem = num.c_;
  if (num.degree() < den.degree()) return {Poly(), num};
  std::vector<Rational> quo(num.c_.size() - den.c_.size() + 1, Rational(0));
  Rational lead = den.c_.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    std::size_t top = k + den.c_.size() - 1;
    if (top >= rem.size() || rem[top].is_zero()) continue;
    Rational q = rem[top] / lead;
    quo[k] = q;
    for (std::size_t j = 0; j < den.c_.size(); ++j) rem[k + j] -= q * den.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != Rational(1)) os << c_[i].str();
    if (i > 0) {
      if (c_[i] != Rational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void Bivar::add_term(int du, int dv, const Rational& coef) {
  if (coef.is_zero()) return;
  auto key = std::make_pair(du, dv);
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, coef);
  } else {
    it->second += coef;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Rational Bivar::eval(const Rational& u, const Rational& v) const {
  Rational acc(0);
  for (const auto& [k, c] : t_) acc += c * u.pow(k.first) * v.pow(k.second);
  return acc;
}

Bivar operator+(const Bivar& a, const Bivar& b) {
  Bivar r = a;
  for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
  return r;
}

Bivar operator-(const Bivar& a, const Bivar& b) {
  Bivar r = a;
  for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, -c);
  return r;
}

Bivar operator*(const Bivar& a, const Bivar& b) {
  Bivar r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

Bivar operator*(const Rational& k, const Bivar& b) {
  Bivar r;
  for (const auto& [key, c] : b.t_) r.add_term(key.first, key.second, k * c);
  return r;
}

Poly Bivar::integral_v_to(const Rational& a, const Rational& b) const {
  // F(u, a + b*u) where F is the v-antiderivative
  Poly bound({a, b});
  Poly result;
  // group by v-degree to share the bound powers
  std::map<int, Poly> by_vdeg;
  for (const auto& [k, c] : t_) {
    Rational coef = c / Rational(k.second + 1);
    Poly term;
    {
      std::vector<Rational> mono(static_cast<std::size_t>(k.first) + 1, Rational(0));
      mono.back() = coef;
      term = Poly(std::move(mono));
    }
    auto it = by_vdeg.find(k.second + 1);
    if (it == by_vdeg.end()) by_vdeg.emplace(k.second + 1, term);
    else it->second += term;
  }
  Poly pow_cache(Rational(1));
  int cur = 0;
  for (auto& [vdeg, coef_poly] : by_vdeg) {
    while (cur < vdeg) { pow_cache = pow_cache * bound; ++cur; }
    result += coef_poly * pow_cache;
  }
  return result;
}

std::string Bivar::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (k.first) os << "*u" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
    if (k.second) os << "*v" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
  }
  return os.str();
}

}  // namespace fano216
