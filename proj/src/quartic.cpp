#include "fano216/quartic.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fano216/matrix.hpp"

namespace fano216 {

namespace {

bool degree_at_most(const MPoly& p, long d) {
  return p.is_zero() || (p.is_homogeneous(d) && p.total_degree() == d);
}

// symbols a0 a1 a2 a3 b0 b1 b2 b3
enum { A0, A1, A2, A3, B0, B1, B2, B3, NSYM };

MPoly sym(int i) { return MPoly::variable(NSYM, i); }
MPoly konst(long k) { return MPoly::constant(NSYM, Rational(k)); }

}  // namespace

void PencilData::validate() const {
  if (!degree_at_most(alpha0, 2) || !degree_at_most(beta0, 2))
    throw std::invalid_argument("PencilData: alpha0/beta0 must be quadratic forms");
  for (const MPoly* f : {&alpha1, &alpha2, &alpha3, &beta1, &beta2, &beta3})
    if (!degree_at_most(*f, 1))
      throw std::invalid_argument("PencilData: alpha1..3, beta1..3 must be linear forms");
}

std::vector<std::vector<MPoly>> quadric_matrix(const PencilData& p) {
  p.validate();
  if (p.alpha1.is_zero())
    throw std::domain_error("chart invalid; permute coordinates");
  const MPoly one = MPoly::constant(PencilData::kVars, Rational(1));
  const MPoly two = MPoly::constant(PencilData::kVars, Rational(2));
  MPoly m00 = two * p.alpha2 * p.alpha2;
  MPoly m01 = two * p.alpha2 * p.alpha3 - one;
  MPoly m02 = p.beta2 - p.alpha2 * p.beta1 + two * p.alpha0 * p.alpha2;
  MPoly m11 = two * p.alpha3 * p.alpha3;
  MPoly m12 = p.beta3 - p.alpha3 * p.beta1 + two * p.alpha0 * p.alpha3;
  MPoly m22 = two * (p.beta0 + p.alpha0 * p.alpha0 - p.alpha0 * p.beta1);
  return {{m00, m01, m02}, {m01, m11, m12}, {m02, m12, m22}};
}

MPoly discriminant_reference_expanded() {
  // a0^2 - a0 a1 b1 + 2 a0 a2 b3 + 2 a0 a3 b2 + a1^2 b0 + a1^2 b2 b3
  //   - a1 a2 b1 b3 - a1 a3 b1 b2 + a2^2 b3^2 - 4 a2 a3 b0 + a2 a3 b1^2
  //   - 2 a2 a3 b2 b3 + a3^2 b2^2
  MPoly r = sym(A0) * sym(A0);
  r = r - sym(A0) * sym(A1) * sym(B1);
  r = r + konst(2) * sym(A0) * sym(A2) * sym(B3);
  r = r + konst(2) * sym(A0) * sym(A3) * sym(B2);
  r = r + sym(A1) * sym(A1) * sym(B0);
  r = r + sym(A1) * sym(A1) * sym(B2) * sym(B3);
  r = r - sym(A1) * sym(A2) * sym(B1) * sym(B3);
  r = r - sym(A1) * sym(A3) * sym(B1) * sym(B2);
  r = r + sym(A2) * sym(A2) * sym(B3) * sym(B3);
  r = r - konst(4) * sym(A2) * sym(A3) * sym(B0);
  r = r + sym(A2) * sym(A3) * sym(B1) * sym(B1);
  r = r - konst(2) * sym(A2) * sym(A3) * sym(B2) * sym(B3);
  r = r + sym(A3) * sym(A3) * sym(B2) * sym(B2);
  return r;
}

MPoly discriminant_closed_form_symbolic() {
  // (a0 - a1 b1 / 2 + a2 b3 + a3 b2)^2 + (a1^2 - 4 a2 a3)(b0 - b1^2/4 + b2 b3)
  MPoly half = MPoly::constant(NSYM, Rational(1, 2));
  MPoly quarter = MPoly::constant(NSYM, Rational(1, 4));
  MPoly first = sym(A0) - half * sym(A1) * sym(B1) + sym(A2) * sym(B3) + sym(A3) * sym(B2);
  MPoly second = (sym(A1) * sym(A1) - konst(4) * sym(A2) * sym(A3)) *
                 (sym(B0) - quarter * sym(B1) * sym(B1) + sym(B2) * sym(B3));
  return first * first + second;
}

namespace {

std::once_flag g_identity_once;
Rational g_identity_constant;

void run_identity_check() {
  MPoly ref = discriminant_reference_expanded();
  MPoly closed = discriminant_closed_form_symbolic();
  if (!(ref == closed))
    throw std::logic_error("discriminant identity: closed form != expanded reference");

  // det of the displayed matrix over the 8 scalar symbols, in the a1 = 1 chart
  const MPoly one8 = MPoly::constant(NSYM, Rational(1));
  MPoly m00 = konst(2) * sym(A2) * sym(A2);
  MPoly m01 = konst(2) * sym(A2) * sym(A3) - one8;
  MPoly m02 = sym(B2) - sym(A2) * sym(B1) + konst(2) * sym(A0) * sym(A2);
  MPoly m11 = konst(2) * sym(A3) * sym(A3);
  MPoly m12 = sym(B3) - sym(A3) * sym(B1) + konst(2) * sym(A0) * sym(A3);
  MPoly m22 = konst(2) * (sym(B0) + sym(A0) * sym(A0) - sym(A0) * sym(B1));
  MPoly det = mpoly_det({{m00, m01, m02}, {m01, m11, m12}, {m02, m12, m22}});

  // substitute a1 = 1 in the reference
  std::vector<MPoly> images;
  for (int i = 0; i < NSYM; ++i)
    images.push_back(i == A1 ? one8 : MPoly::variable(NSYM, i));
  MPoly ref_a1 = ref.substitute(images);

  // c by leading-coefficient comparison, then the full identity
  auto lt_det = det.leading_term();
  auto lt_ref = ref_a1.leading_term();
  if (lt_det.first != lt_ref.first)
    throw std::logic_error("discriminant identity: leading terms disagree");
  Rational c = lt_det.second / lt_ref.second;
  if (!(det == c * ref_a1))
    throw std::logic_error("discriminant identity: det != c * Delta'");
  g_identity_constant = c;
}

}  // namespace

Rational discriminant_identity_constant() {
  std::call_once(g_identity_once, run_identity_check);
  return g_identity_constant;
}

DiscriminantCurve discriminant(const PencilData& p) {
  p.validate();
  DiscriminantCurve out;
  out.det_constant = discriminant_identity_constant();

  const std::size_t n = PencilData::kVars;
  MPoly half = MPoly::constant(n, Rational(1, 2));
  MPoly quarter = MPoly::constant(n, Rational(1, 4));
  MPoly four = MPoly::constant(n, Rational(4));
  MPoly first = p.alpha0 - half * p.alpha1 * p.beta1 + p.alpha2 * p.beta3 + p.alpha3 * p.beta2;
  MPoly second = (p.alpha1 * p.alpha1 - four * p.alpha2 * p.alpha3) *
                 (p.beta0 - quarter * p.beta1 * p.beta1 + p.beta2 * p.beta3);
  out.delta = first * first + second;
  if (!out.delta.is_zero() && !out.delta.is_homogeneous(4))
    throw std::logic_error("discriminant: result not a homogeneous quartic");
  return out;
}

FiberType fiber_type(const PencilData& p, const std::array<Rational, 3>& point) {
  p.validate();
  std::vector<Rational> pt(point.begin(), point.end());
  Rational a0 = p.alpha0.eval(pt), a1 = p.alpha1.eval(pt), a2 = p.alpha2.eval(pt),
           a3 = p.alpha3.eval(pt);
  Rational b0 = p.beta0.eval(pt), b1 = p.beta1.eval(pt), b2 = p.beta2.eval(pt),
           b3 = p.beta3.eval(pt);

  // restrict the quadric b0 x7^2 + (b1 x4 + b2 x5 + b3 x6) x7 + x4^2 - x5 x6
  // to the hyperplane a0 x7 + a1 x4 + a2 x5 + a3 x6 = 0 of P^3
  Matrix<Rational> q(4, 4);  // x4, x5, x6, x7 -- doubled quadratic form
  q(0, 0) = Rational(2);
  q(1, 2) = q(2, 1) = Rational(-1);
  q(3, 3) = Rational(2) * b0;
  q(0, 3) = q(3, 0) = b1;
  q(1, 3) = q(3, 1) = b2;
  q(2, 3) = q(3, 2) = b3;

  // pivot preference alpha1, alpha2, alpha3; alpha0 (the x7 slot) last
  std::array<Rational, 4> lin{a1, a2, a3, a0};
  int pivot = -1;
  for (int cand : {0, 1, 2, 3})
    if (!lin[cand].is_zero()) {
      pivot = cand;
      break;
    }
  if (pivot < 0) throw std::domain_error("chart invalid; permute coordinates");
  // basis of the hyperplane: for each j != pivot, e_j - (lin_j/lin_pivot) e_pivot
  Matrix<Rational> basis(4, 3);
  int col = 0;
  for (int j = 0; j < 4; ++j) {
    if (j == pivot) continue;
    basis(j, col) = Rational(1);
    basis(pivot, col) = -lin[j] / lin[pivot];
    ++col;
  }
  Matrix<Rational> restricted = basis.transposed() * q * basis;
  std::size_t rank = matrix_rank(restricted);
  switch (rank) {
    case 3: return FiberType::Smooth;
    case 2: return FiberType::TwoLines;
    case 1: return FiberType::DoubleLine;
    default: throw std::domain_error("pencil degenerate at point");
  }
}

bool singular_at(const DiscriminantCurve& d, const std::array<Cyclo, 3>& point) {
  if (d.delta.is_zero()) throw std::invalid_argument("singular_at: zero discriminant");
  std::vector<Cyclo> pt(point.begin(), point.end());
  if (!d.delta.eval(pt).is_zero()) return false;
  for (std::size_t v = 0; v < 3; ++v)
    if (!d.delta.partial(v).eval(pt).is_zero()) return false;
  return true;
}

ExceptionalSurface exceptional_surface_type(const PencilData& p) {
  p.validate();
  Matrix<Rational> coeff(3, 3);
  const MPoly* lins[3] = {&p.alpha1, &p.alpha2, &p.alpha3};
  bool any = false;
  for (int i = 0; i < 3; ++i) {
    for (const auto& [exps, c] : lins[i]->terms()) {
      for (int v = 0; v < 3; ++v)
        if (exps[v] == 1) {
          coeff(i, v) = c;
          any = true;
        }
    }
  }
  if (!any) throw std::domain_error("plane contained in both quadrics");
  return matrix_rank(coeff) == 3 ? ExceptionalSurface::P1xP1 : ExceptionalSurface::F2;
}

KStabilityCertificate kstability_certificate(const DiscriminantCurve& d,
                                             const std::vector<SingularPointAudit>& audit) {
  KStabilityCertificate cert;
  cert.det_constant = d.det_constant;
  for (const auto& entry : audit) {
    std::array<Cyclo, 3> pt{Cyclo(entry.point[0]), Cyclo(entry.point[1]),
                            Cyclo(entry.point[2])};
    if (!singular_at(d, pt)) throw std::domain_error("invalid audit");
  }
  bool blocked = false;
  for (const auto& entry : audit)
    if (entry.defined_over_k && entry.group_fixed) blocked = true;
  if (audit.empty()) {
    cert.verdict = "K-stable (Main Theorem)";
    cert.route = "Corollary B: the discriminant quartic is smooth";
  } else if (!blocked) {
    bool any_k = false, any_fixed = false;
    for (const auto& entry : audit) {
      any_k = any_k || entry.defined_over_k;
      any_fixed = any_fixed || entry.group_fixed;
    }
    cert.verdict = "K-stable (Main Theorem)";
    if (!any_k)
      cert.route = "Corollary A: no k-points among the singular points";
    else if (!any_fixed)
      cert.route = "Corollaries D/E: no group-fixed singular points";
    else
      cert.route = "Main Theorem: no singular point is both k-rational and fixed";
  } else {
    cert.verdict = "inconclusive";
    cert.route = "a singular point is k-rational and group-fixed";
  }
  return cert;
}

PencilData parse_pencil(const std::string& text) {
  // Lines: "<name> c1 c2 ..." with quadratic forms listing coefficients of
  // x1^2 x1x2 x1x3 x2^2 x2x3 x3^2 and linear forms of x1 x2 x3.
  PencilData p;
  const std::size_t n = PencilData::kVars;
  auto quad = [&](const std::vector<Rational>& c) {
    MPoly f(n);
    static const int exps[6][3] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                   {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    for (int k = 0; k < 6; ++k) f.add_term({exps[k][0], exps[k][1], exps[k][2]}, c[k]);
    return f;
  };
  auto lin = [&](const std::vector<Rational>& c) {
    MPoly f(n);
    f.add_term({1, 0, 0}, c[0]);
    f.add_term({0, 1, 0}, c[1]);
    f.add_term({0, 0, 1}, c[2]);
    return f;
  };
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "pencil" || key == "end") continue;
    std::vector<Rational> c;
    std::string tok;
    while (ls >> tok) c.push_back(Rational::parse(tok));
    auto need = [&](std::size_t k) {
      if (c.size() != k)
        throw std::invalid_argument("parse_pencil: " + key + " expects " + std::to_string(k) +
                                    " coefficients");
    };
    if (key == "alpha0") { need(6); p.alpha0 = quad(c); }
    else if (key == "alpha1") { need(3); p.alpha1 = lin(c); }
    else if (key == "alpha2") { need(3); p.alpha2 = lin(c); }
    else if (key == "alpha3") { need(3); p.alpha3 = lin(c); }
    else if (key == "beta0") { need(6); p.beta0 = quad(c); }
    else if (key == "beta1") { need(3); p.beta1 = lin(c); }
    else if (key == "beta2") { need(3); p.beta2 = lin(c); }
    else if (key == "beta3") { need(3); p.beta3 = lin(c); }
    else throw std::invalid_argument("parse_pencil: unknown key " + key);
  }
  p.validate();
  return p;
}

}  // namespace fano216
