#include "fano216/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fano216 {

long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// polynomial helpers on dense Rational vectors, constant term first
using PolyVec = std::vector<Rational>;

void trim(PolyVec& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

PolyVec poly_mul(const PolyVec& a, const PolyVec& b) {
  if (a.empty() || b.empty()) return {};
  PolyVec r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// exact division, divisor monic; throws if remainder nonzero
PolyVec poly_div_exact(PolyVec num, const PolyVec& den) {
  if (den.empty() || den.back() != Rational(1))
    throw std::logic_error("poly_div_exact: divisor not monic");
  trim(num);
  if (num.size() < den.size()) {
    if (!num.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return {};
  }
  PolyVec q(num.size() - den.size() + 1, Rational(0));
  for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
    Rational c = num[i + den.size() - 1];
    q[i] = c;
    if (c.is_zero()) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

// remainder of num modulo monic den
PolyVec poly_mod(PolyVec num, const PolyVec& den) {
  trim(num);
  long d = static_cast<long>(den.size()) - 1;
  while (static_cast<long>(num.size()) - 1 >= d) {
    Rational c = num.back();
    size_t shift = num.size() - den.size();
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    trim(num);
  }
  return num;
}

std::map<long, PolyVec> g_cyclo_cache;
std::mutex g_cyclo_mutex;

// Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, filled bottom-up so every
// divisor is already cached when needed. Caller holds the lock.
const PolyVec& cyclotomic_locked(long n) {
  auto it = g_cyclo_cache.find(n);
  if (it != g_cyclo_cache.end()) return it->second;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || g_cyclo_cache.count(d)) continue;
    PolyVec num(d + 1, Rational(0));
    num[0] = Rational(-1);
    num[d] = Rational(1);
    for (long e = 1; e < d; ++e)
      if (d % e == 0) num = poly_div_exact(std::move(num), g_cyclo_cache.at(e));
    g_cyclo_cache.emplace(d, std::move(num));
  }
  return g_cyclo_cache.at(n);
}

const PolyVec& cyclotomic_cached(long n) {
  // lock-free fast path: map nodes are stable, so cached pointers stay valid
  thread_local std::map<long, const PolyVec*> lookaside;
  auto hit = lookaside.find(n);
  if (hit != lookaside.end()) return *hit->second;
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  const PolyVec& v = cyclotomic_locked(n);
  lookaside.emplace(n, &v);
  return v;
}

}  // namespace

const std::vector<Rational>& cyclotomic_poly(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  return cyclotomic_cached(n);
}

Cyclo::Cyclo(long n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {
  if (n < 1) throw std::invalid_argument("Cyclo: conductor must be positive");
  reduce_();
}

void Cyclo::reduce_() {
  const PolyVec& phi = cyclotomic_poly(n_);
  size_t deg = phi.size() - 1;
  if (c_.size() > deg) c_ = poly_mod(std::move(c_), phi);
  c_.resize(deg, Rational(0));
}

Cyclo Cyclo::zeta(long n, long k) {
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  c[k] = Rational(1);
  return Cyclo(n, std::move(c));
}

bool Cyclo::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclo::to_rational() const {
  if (!is_rational()) throw std::domain_error("Cyclo: not a rational element");
  return c_[0];
}

Cyclo Cyclo::promoted(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("Cyclo::promoted: not a multiple");
  long step = m / n_;
  std::vector<Rational> c(static_cast<size_t>(c_.size()) * step, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i * step] = c_[i];
  return Cyclo(m, std::move(c));
}

std::pair<Cyclo, Cyclo> promote_pair(const Cyclo& a, const Cyclo& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  long l = static_cast<long>(rational_lcm(a.conductor(), b.conductor()).get_si());
  if (l > 120) throw std::domain_error("incompatible fields");
  return {a.promoted(l), b.promoted(l)};
}

Cyclo Cyclo::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Cyclo(n_, std::move(c));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  auto [x, y] = promote_pair(a, b);
  std::vector<Rational> c(x.coeffs());
  for (size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
  return Cyclo(x.conductor(), std::move(c));
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  auto [x, y] = promote_pair(a, b);
  PolyVec prod = poly_mul(x.coeffs(), y.coeffs());
  return Cyclo(x.conductor(), std::move(prod));
}

Cyclo operator*(const Rational& a, const Cyclo& b) { return Cyclo(a) * b; }

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclo: inverse of zero");
  if (is_rational()) return Cyclo(c_[0].inverse());
  // extended Euclid: u * this + v * Phi_n = gcd = const
  PolyVec r0 = cyclotomic_poly(n_), r1 = c_;
  trim(r1);
  PolyVec u0{}, u1{Rational(1)};  // coefficients of `this`
  while (true) {
    trim(r1);
    if (r1.empty()) throw std::logic_error("Cyclo: element not invertible");
    if (r1.size() == 1) break;
    // r0 = q*r1 + r2 with deg r2 < deg r1
    PolyVec q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
    PolyVec rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
      trim(rem);
      if (rem.size() <= shift) break;
    }
    PolyVec u2 = u0;
    {
      PolyVec qu = poly_mul(q, u1);
      u2.resize(std::max(u2.size(), qu.size()), Rational(0));
      for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
      trim(u2);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  Rational g = r1[0];
  PolyVec inv = u1;
  for (auto& coef : inv) coef /= g;
  return Cyclo(n_, std::move(inv));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

Cyclo Cyclo::pow(long e) const {
  if (e == 0) return Cyclo(Rational(1));
  Cyclo base = e > 0 ? *this : inverse();
  long k = e > 0 ? e : -e;
  Cyclo acc{Rational(1)};
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.conductor() == b.conductor()) return a.coeffs() == b.coeffs();
  auto [x, y] = promote_pair(a, b);
  return x.coeffs() == y.coeffs();
}

bool operator<(const Cyclo& a, const Cyclo& b) {
  if (a.conductor() != b.conductor()) {
    auto [x, y] = promote_pair(a, b);
    if (x.coeffs() == y.coeffs()) return false;
    return std::lexicographical_compare(x.coeffs().begin(), x.coeffs().end(),
                                        y.coeffs().begin(), y.coeffs().end());
  }
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

long Cyclo::root_of_unity_order() const {
  Cyclo acc = *this;
  const Cyclo one{Rational(1)};
  for (long k = 1; k <= 240; ++k) {
    if (acc == one) return k;
    acc = acc * (*this);
  }
  return 0;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i].str();
    } else {
      if (c_[i] != Rational(1)) os << c_[i].str() << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string Cyclo::json_str() const {
  std::ostringstream os;
  os << "{\"conductor\": " << n_ << ", \"coeffs\": [";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << '"' << c_[i].str() << '"';
  }
  os << "]}";
  return os.str();
}

Cyclo cyclo_sqrt(long n) {
  switch (n) {
    case 2: return Cyclo::zeta(8, 1) + Cyclo::zeta(8, 7);
    case 3: return Cyclo::zeta(12, 1) + Cyclo::zeta(12, 11);
    case 5: {
      Cyclo s = Cyclo::zeta(5, 1) + Cyclo::zeta(5, 4);
      return Rational(2) * s + Cyclo(Rational(1));
    }
    default: throw std::invalid_argument("cyclo_sqrt: only 2, 3, 5 supported");
  }
}

namespace {

// recursive-descent parser for cyclotomic scalar expressions
struct CycloParser {
  const std::string& s;
  size_t pos = 0;

  explicit CycloParser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }

  Cyclo parse_expr() {
    Cyclo v = parse_term();
    while (true) {
      skip();
      if (eat('+')) v = v + parse_term();
      else if (eat('-')) v = v - parse_term();
      else return v;
    }
  }

  Cyclo parse_term() {
    Cyclo v = parse_factor();
    while (true) {
      skip();
      if (eat('*')) v = v * parse_factor();
      else if (eat('/')) v = v / parse_factor();
      else return v;
    }
  }

  Cyclo parse_factor() {
    skip();
    if (eat('-')) return -parse_factor();
    if (eat('+')) return parse_factor();
    Cyclo v = parse_atom();
    skip();
    if (eat('^')) {
      long e = parse_integer();
      v = v.pow(e);
    }
    return v;
  }

  long parse_integer() {
    skip();
    bool neg = eat('-');
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("parse_cyclo: integer expected at '" + s.substr(start) + "'");
    long v = std::stol(s.substr(start, pos - start));
    return neg ? -v : v;
  }

  Cyclo parse_atom() {
    skip();
    if (eat('(')) {
      Cyclo v = parse_expr();
      if (!eat(')')) throw std::invalid_argument("parse_cyclo: missing ')'");
      return v;
    }
    if (pos < s.size() && s[pos] == 'i' &&
        (pos + 1 >= s.size() || !isalnum(static_cast<unsigned char>(s[pos + 1])))) {
      ++pos;
      return Cyclo::zeta(4, 1);
    }
    if (s.compare(pos, 4, "sqrt") == 0) {
      pos += 4;
      long n = parse_integer();
      return cyclo_sqrt(n);
    }
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      long n = parse_integer();
      return Cyclo::zeta(n, 1);
    }
    // number
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("parse_cyclo: unexpected '" + s.substr(pos) + "'");
    return Cyclo(Rational::parse(s.substr(start, pos - start)));
  }
};

}  // namespace

Cyclo parse_cyclo(const std::string& text) {
  CycloParser p(text);
  Cyclo v = p.parse_expr();
  p.skip();
  if (p.pos != text.size())
    throw std::invalid_argument("parse_cyclo: trailing input '" + text.substr(p.pos) + "'");
  return v;
}

}  // namespace fano216
