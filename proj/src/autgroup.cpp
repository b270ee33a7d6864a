#include "fano216/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fano216 {

SignedMonomialMatrix::SignedMonomialMatrix() {
  for (int i = 0; i < 6; ++i) {
    perm_[i] = i;
    scale_[i] = Cyclo::one();
  }
}

SignedMonomialMatrix::SignedMonomialMatrix(std::array<int, 6> perm, std::array<Cyclo, 6> scale)
    : perm_(perm), scale_(std::move(scale)) {
  std::array<bool, 6> seen{};
  for (int i = 0; i < 6; ++i) {
    if (perm_[i] < 0 || perm_[i] >= 6 || seen[perm_[i]])
      throw std::invalid_argument("SignedMonomialMatrix: not a permutation pattern");
    seen[perm_[i]] = true;
    if (scale_[i].is_zero())
      throw std::invalid_argument("SignedMonomialMatrix: zero scale entry");
  }
}

SignedMonomialMatrix SignedMonomialMatrix::minus_identity() {
  SignedMonomialMatrix m;
  for (int i = 0; i < 6; ++i) m.scale_[i] = -Cyclo::one();
  return m;
}

// (this * o): row i of the product has entry scale_[i] * o.scale[perm_[i]]
// in column o.perm[perm_[i]], since (this*o)x = this(o x).
SignedMonomialMatrix SignedMonomialMatrix::operator*(const SignedMonomialMatrix& o) const {
  std::array<int, 6> p;
  std::array<Cyclo, 6> s;
  for (int i = 0; i < 6; ++i) {
    p[i] = o.perm_[perm_[i]];
    s[i] = scale_[i] * o.scale_[perm_[i]];
  }
  return SignedMonomialMatrix(p, std::move(s));
}

SignedMonomialMatrix SignedMonomialMatrix::inverse() const {
  std::array<int, 6> p;
  std::array<Cyclo, 6> s;
  for (int i = 0; i < 6; ++i) {
    p[perm_[i]] = i;
    s[perm_[i]] = scale_[i].inverse();
  }
  return SignedMonomialMatrix(p, std::move(s));
}

SignedMonomialMatrix SignedMonomialMatrix::negated() const {
  std::array<Cyclo, 6> s;
  for (int i = 0; i < 6; ++i) s[i] = -scale_[i];
  return SignedMonomialMatrix(perm_, std::move(s));
}

bool operator<(const SignedMonomialMatrix& a, const SignedMonomialMatrix& b) {
  if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
  for (int i = 0; i < 6; ++i) {
    if (a.scale_[i] == b.scale_[i]) continue;
    return a.scale_[i] < b.scale_[i];
  }
  return false;
}

Matrix<Cyclo> SignedMonomialMatrix::dense() const {
  Matrix<Cyclo> m(6, 6);
  for (int i = 0; i < 6; ++i) m(i, perm_[i]) = scale_[i];
  return m;
}

std::string SignedMonomialMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 6; ++i) {
    if (i) os << ", ";
    os << "(" << scale_[i].str() << ")*e" << perm_[i];
  }
  os << "]";
  return os.str();
}

bool FiniteMatrixGroup::contains(const SignedMonomialMatrix& m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

FiniteMatrixGroup group_closure(const std::vector<SignedMonomialMatrix>& gens, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("group_closure: cap must be positive");
  std::set<SignedMonomialMatrix> seen;
  seen.insert(SignedMonomialMatrix());
  std::vector<SignedMonomialMatrix> frontier(seen.begin(), seen.end());
  for (const auto& g : gens)
    if (seen.insert(g).second) frontier.push_back(g);
  // deterministic layered breadth-first closure
  while (!frontier.empty()) {
    std::vector<SignedMonomialMatrix> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        SignedMonomialMatrix p = m * g;
        if (seen.insert(p).second) {
          next.push_back(p);
          if (seen.size() > cap) throw std::domain_error("group too large or infinite");
        }
      }
    }
    frontier = std::move(next);
  }
  FiniteMatrixGroup out;
  out.generators = gens;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

std::string GroupFingerprint::str() const {
  std::ostringstream os;
  os << "order=" << order << (abelian ? " abelian" : " nonabelian") << " exp=" << exponent
     << " hist=";
  for (const auto& [o, c] : order_histogram) os << o << ":" << c << " ";
  os << "derived=" << derived_order;
  return os.str();
}

namespace {

// abstract group on indices with a multiplication table
struct SmallGroup {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> mul;
  std::size_t id = 0;

  std::size_t inv(std::size_t i) const {
    for (std::size_t j = 0; j < n; ++j)
      if (mul[i][j] == id) return j;
    throw std::logic_error("SmallGroup: no inverse");
  }

  GroupFingerprint fingerprint() const {
    GroupFingerprint fp;
    fp.order = n;
    std::map<long, std::size_t> hist;
    for (std::size_t i = 0; i < n; ++i) {
      long o = 1;
      std::size_t j = i;
      while (j != id) {
        j = mul[j][i];
        ++o;
      }
      hist[o]++;
      fp.exponent = std::lcm(fp.exponent, o);
    }
    fp.order_histogram.assign(hist.begin(), hist.end());
    fp.abelian = true;
    for (std::size_t i = 0; i < n && fp.abelian; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (mul[i][j] != mul[j][i]) {
          fp.abelian = false;
          break;
        }
    // derived subgroup: closure of commutators
    std::set<std::size_t> der;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t c = mul[mul[mul[i][j]][inv(i)]][inv(j)];
        der.insert(c);
      }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::size_t> cur(der.begin(), der.end());
      for (std::size_t a : cur)
        for (std::size_t b : cur)
          if (der.insert(mul[a][b]).second) grew = true;
    }
    fp.derived_order = der.size();
    return fp;
  }
};

}  // namespace

GroupFingerprint quotient_fingerprint(const FiniteMatrixGroup& g) {
  // canonical coset representatives modulo +-I
  std::map<SignedMonomialMatrix, std::size_t> index;
  std::vector<SignedMonomialMatrix> reps;
  auto canon = [](const SignedMonomialMatrix& m) {
    SignedMonomialMatrix neg = m.negated();
    return neg < m ? neg : m;
  };
  for (const auto& m : g.elements) {
    SignedMonomialMatrix r = canon(m);
    if (!index.count(r)) {
      index.emplace(r, reps.size());
      reps.push_back(r);
    }
  }
  SmallGroup q;
  q.n = reps.size();
  q.mul.assign(q.n, std::vector<std::size_t>(q.n, 0));
  for (std::size_t i = 0; i < q.n; ++i)
    for (std::size_t j = 0; j < q.n; ++j) q.mul[i][j] = index.at(canon(reps[i] * reps[j]));
  q.id = index.at(canon(SignedMonomialMatrix()));
  return q.fingerprint();
}

namespace {

SignedMonomialMatrix perm_matrix(const std::vector<std::vector<int>>& cycles) {
  std::array<int, 6> p{0, 1, 2, 3, 4, 5};
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  std::array<Cyclo, 6> s;
  s.fill(Cyclo::one());
  // rows permuted: row i gets e_{p[i]}
  return SignedMonomialMatrix(p, std::move(s));
}

// fingerprint of an abstract permutation-presented group, computed by the
// same closure machinery on permutation matrices (at most 6 points here; for
// larger degrees two commuting blocks are multiplied)
GroupFingerprint perm_fingerprint(const std::vector<std::vector<std::vector<int>>>& gens) {
  std::vector<SignedMonomialMatrix> ms;
  for (const auto& g : gens) ms.push_back(perm_matrix(g));
  FiniteMatrixGroup grp = group_closure(ms);
  // plain fingerprint (no quotient): reuse SmallGroup via index maps
  std::map<SignedMonomialMatrix, std::size_t> index;
  for (const auto& m : grp.elements) index.emplace(m, index.size());
  SmallGroup q;
  q.n = grp.elements.size();
  q.mul.assign(q.n, std::vector<std::size_t>(q.n, 0));
  for (std::size_t i = 0; i < q.n; ++i)
    for (std::size_t j = 0; j < q.n; ++j)
      q.mul[i][j] = index.at(grp.elements[i] * grp.elements[j]);
  q.id = index.at(SignedMonomialMatrix());
  return q.fingerprint();
}

// direct product fingerprint for presentations needing more than 6 points
GroupFingerprint product_fingerprint(const GroupFingerprint& a, const GroupFingerprint& b) {
  GroupFingerprint fp;
  fp.order = a.order * b.order;
  fp.abelian = a.abelian && b.abelian;
  fp.exponent = std::lcm(a.exponent, b.exponent);
  std::map<long, std::size_t> hist;
  for (const auto& [oa, ca] : a.order_histogram)
    for (const auto& [ob, cb] : b.order_histogram) hist[std::lcm(oa, ob)] += ca * cb;
  fp.order_histogram.assign(hist.begin(), hist.end());
  fp.derived_order = a.derived_order * b.derived_order;
  return fp;
}

}  // namespace

const std::map<std::string, GroupFingerprint>& reference_fingerprints() {
  static const std::map<std::string, GroupFingerprint> table = [] {
    std::map<std::string, GroupFingerprint> t;
    t["trivial"] = perm_fingerprint({});
    t["C2"] = perm_fingerprint({{{0, 1}}});
    t["C3"] = perm_fingerprint({{{0, 1, 2}}});
    t["C2^2"] = perm_fingerprint({{{0, 1}}, {{2, 3}}});
    t["C5"] = perm_fingerprint({{{0, 1, 2, 3, 4}}});
    t["C6"] = perm_fingerprint({{{0, 1, 2, 3, 4, 5}}});
    t["C2^3"] = perm_fingerprint({{{0, 1}}, {{2, 3}}, {{4, 5}}});
    t["D4"] = perm_fingerprint({{{0, 1, 2, 3}}, {{0, 2}}});
    t["A4"] = perm_fingerprint({{{0, 1, 2}}, {{0, 1}, {2, 3}}});
    // C10 = C2 x C5 on disjoint points
    t["C10"] = product_fingerprint(t["C2"], t["C5"]);
    // C2^2 x C4 = C2^2 (on 4 points) x C4
    t["C2^2xC4"] =
        product_fingerprint(t["C2^2"], perm_fingerprint({{{0, 1, 2, 3}}}));
    // C2^2 : C4 with the C4 swapping the two C2 factors; the order-4
    // generator is (02)(13) paired with an independent 4-cycle to keep its
    // order, realized on 6 points as (02)(13) x (45)... needs order 4: use
    // the faithful 8-point model as a product is not available here, so
    // build it directly on 6 points: t = (0 2 1 3)? -- instead use matrices:
    // generators u=(01), v=(23), m with m u m^-1 = v and m^2 independent.
    {
      std::array<int, 6> p{2, 3, 0, 1, 5, 4};  // swaps blocks {0,1}<->{2,3}, flips {4,5}
      std::array<Cyclo, 6> s;
      s.fill(Cyclo::one());
      s[4] = -Cyclo::one();  // makes the element have order 4
      SignedMonomialMatrix m(p, std::move(s));
      std::vector<SignedMonomialMatrix> gens{perm_matrix({{0, 1}}), perm_matrix({{2, 3}}), m};
      FiniteMatrixGroup grp = group_closure(gens);
      std::map<SignedMonomialMatrix, std::size_t> index;
      for (const auto& el : grp.elements) index.emplace(el, index.size());
      SmallGroup q;
      q.n = grp.elements.size();
      q.mul.assign(q.n, std::vector<std::size_t>(q.n, 0));
      for (std::size_t i = 0; i < q.n; ++i)
        for (std::size_t j = 0; j < q.n; ++j)
          q.mul[i][j] = index.at(grp.elements[i] * grp.elements[j]);
      q.id = index.at(SignedMonomialMatrix());
      t["C2^2:C4"] = q.fingerprint();
    }
    t["C2xA4"] = product_fingerprint(t["C2"], t["A4"]);
    return t;
  }();
  return table;
}

std::string identify_group(const FiniteMatrixGroup& g) {
  bool has_minus = g.contains(SignedMonomialMatrix::minus_identity());
  if (!has_minus) throw std::invalid_argument("identify_group: -I not in group");
  GroupFingerprint fp = quotient_fingerprint(g);
  for (const auto& [name, ref] : reference_fingerprints())
    if (fp == ref) return name;
  return "unknown " + fp.str();
}

bool pencil_invariant(const std::array<int, 6>& sigma, const std::vector<Cyclo>& a,
                      const std::optional<Cyclo>& lambda) {
  if (a.size() != 6) throw std::invalid_argument("pencil_invariant: need 6 scalars");
  const bool singular = lambda.has_value();
  // distinctness preconditions
  int limit = singular ? 5 : 6;
  for (int i = 0; i < limit; ++i)
    for (int j = i + 1; j < limit; ++j)
      if (a[i] == a[j]) throw std::invalid_argument("pencil_invariant: a_i not distinct");
  if (singular && a[5].is_zero())
    throw std::invalid_argument("pencil_invariant: a5 must be nonzero");
  if (singular && sigma[5] != 5)
    throw std::invalid_argument("pencil_invariant: singular case needs sigma(5)=5");

  Matrix<Cyclo> m(3, 6);
  for (int j = 0; j < 6; ++j) {
    m(0, j) = (singular && j == 5) ? Cyclo::zero() : Cyclo::one();
    m(1, j) = a[j];
    m(2, j) = a[sigma[j]];
  }
  if (singular) m(2, 5) = (*lambda * *lambda) * a[5];
  return matrix_rank(m) <= 2;
}

std::vector<SkewSolution> skew_classify(const std::vector<Cyclo>& b, Exec mode) {
  if (b.size() != 5) throw std::invalid_argument("skew_classify: need 5 scalars");
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (b[i] == b[j]) throw std::invalid_argument("skew_classify: b_i not distinct");

  std::array<int, 5> base{0, 1, 2, 3, 4};
  std::vector<std::array<int, 5>> perms;
  std::array<int, 5> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto trial = [&](std::size_t idx) -> std::optional<SkewSolution> {
    const auto& nu = perms[idx];
    // c from the first pair, r from the first element, then verify all
    Cyclo c = (b[nu[0]] - b[nu[1]]) / (b[0] - b[1]);
    if (c.is_zero()) return std::nullopt;
    Cyclo r = b[nu[0]] - c * b[0];
    for (int i = 0; i < 5; ++i)
      if (!(b[nu[i]] == c * b[i] + r)) return std::nullopt;
    return SkewSolution{nu, c};
  };

  auto results = map_indexed<std::optional<SkewSolution>>(perms.size(), mode, trial);
  std::vector<SkewSolution> out;
  for (auto& r : results)
    if (r) out.push_back(std::move(*r));
  return out;
}

std::vector<Cyclo> singular_scaling_constraint(const Cyclo& c) {
  long ord = c.root_of_unity_order();
  if (ord != 1 && ord != 2 && ord != 4 && ord != 5)
    throw std::domain_error("singular_scaling_constraint: c must have order 1, 2, 4 or 5");
  long target = 2 * ord;
  std::vector<Cyclo> out;
  for (long k = 0; k < target; ++k) {
    Cyclo lam = Cyclo::zeta(target, k);
    if (lam * lam == c) out.push_back(lam);
  }
  if (out.size() != 2) throw std::logic_error("singular_scaling_constraint: expected two roots");
  return out;
}

bool plane_invariant(const FiniteMatrixGroup& g, const std::vector<std::vector<Cyclo>>& plane) {
  if (plane.size() != 3) throw std::invalid_argument("plane_invariant: need three forms");
  Matrix<Cyclo> base(3, 6);
  for (int i = 0; i < 3; ++i) {
    if (plane[i].size() != 6) throw std::invalid_argument("plane_invariant: forms need 6 terms");
    for (int j = 0; j < 6; ++j) base(i, j) = plane[i][j];
  }
  if (matrix_rank(base) != 3)
    throw std::invalid_argument("plane_invariant: dependent input forms");

  for (const auto& gen : g.generators) {
    // coefficients of L_i(M x): column perm[r] of M carries scale[r] at row r,
    // so x_j appears in (Mx)_r when perm[r] = j
    Matrix<Cyclo> stacked(6, 6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) stacked(i, j) = plane[i][j];
    for (int i = 0; i < 3; ++i) {
      for (int r = 0; r < 6; ++r) {
        int j = gen.perm()[r];
        stacked(3 + i, j) = stacked(3 + i, j) + plane[i][r] * gen.scale()[r];
      }
    }
    if (matrix_rank(stacked) != 3) return false;
  }
  return true;
}

std::array<int, 6> permutation_of(const SignedMonomialMatrix& m) { return m.perm(); }

namespace {

// sample an a-vector satisfying the row's affine relations: assign small
// integers to the free variables, solve for the rest, reject non-distinct
std::vector<Cyclo> sample_relations(const TableRow& row) {
  // treat relations as linear system R * a = 0 over the common field
  const std::size_t m = row.relations.size();
  if (m == 0) {
    // no relations: distinct small integers, a5 nonzero
    std::vector<Cyclo> a;
    for (long i = 0; i < 6; ++i) a.push_back(Cyclo(Rational(i + 1)));
    return a;
  }
  // Gaussian elimination to express leading variables by free ones
  Matrix<Cyclo> r(m, 6);
  for (std::size_t i = 0; i < m; ++i)
    for (int j = 0; j < 6; ++j) r(i, j) = row.relations[i][j];
  // reduced row echelon
  std::vector<int> pivot_col(m, -1);
  std::size_t rank = 0;
  for (int col = 0; col < 6 && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && r(piv, col) == Cyclo::zero()) ++piv;
    if (piv == m) continue;
    for (int j = 0; j < 6; ++j) std::swap(r(piv, j), r(rank, j));
    Cyclo inv = r(rank, col).inverse();
    for (int j = 0; j < 6; ++j) r(rank, j) = r(rank, j) * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || r(i, col) == Cyclo::zero()) continue;
      Cyclo f = r(i, col);
      for (int j = 0; j < 6; ++j) r(i, j) = r(i, j) - f * r(rank, j);
    }
    pivot_col[rank] = col;
    ++rank;
  }
  std::vector<bool> is_pivot(6, false);
  for (std::size_t i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
  // enumerate small integer assignments of the free variables
  std::vector<int> free_cols;
  for (int j = 0; j < 6; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  for (long trial = 1; trial < 4000; ++trial) {
    std::vector<Cyclo> a(6, Cyclo::zero());
    long t = trial;
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      a[free_cols[k]] = Cyclo(Rational((t % 7) + 1 + static_cast<long>(k)));
      t /= 7;
    }
    for (std::size_t i = rank; i-- > 0;) {
      Cyclo v = Cyclo::zero();
      for (int j = pivot_col[i] + 1; j < 6; ++j) v = v - r(i, j) * a[j];
      a[pivot_col[i]] = v;
    }
    // distinctness per case
    int limit = row.singular ? 5 : 6;
    bool ok = true;
    for (int i = 0; i < limit && ok; ++i)
      for (int j = i + 1; j < limit && ok; ++j)
        if (a[i] == a[j]) ok = false;
    if (row.singular && a[5].is_zero()) ok = false;
    if (ok) return a;
  }
  throw std::logic_error("sample_relations: no admissible sample found");
}

}  // namespace

RowReport verify_table_row(const TableRow& row) {
  RowReport rep;
  rep.label = row.label;
  rep.sample_a = sample_relations(row);

  rep.pencil_ok = true;
  for (const auto& gen : row.generators) {
    std::array<int, 6> sigma = permutation_of(gen);
    std::optional<Cyclo> lambda;
    if (row.singular) {
      if (sigma[5] != 5) {
        rep.pencil_ok = false;
        break;
      }
      lambda = gen.scale()[5];
    }
    if (!pencil_invariant(sigma, rep.sample_a, lambda)) rep.pencil_ok = false;
  }

  std::vector<SignedMonomialMatrix> gens = row.generators;
  gens.push_back(SignedMonomialMatrix::minus_identity());
  FiniteMatrixGroup grp = group_closure(gens);
  rep.plane_ok = plane_invariant(grp, row.plane);
  rep.identified = identify_group(grp);
  rep.type_ok = rep.identified == row.claimed_type;
  return rep;
}

}  // namespace fano216
