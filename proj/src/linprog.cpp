#include "fano216/linprog.hpp"

#include <stdexcept>

namespace fano216 {

namespace {

// Tableau simplex on  max c.x, A x = b, x >= 0  with b >= 0 assumed.
// `basis` holds the basic variable of each row. Bland's rule throughout.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
      : a_(std::move(a)), b_(std::move(b)), m_(a_.size()), n_(m_ ? a_[0].size() : 0) {}

  std::size_t cols() const { return n_; }

  void append_column(const std::vector<Rational>& col) {
    for (std::size_t i = 0; i < m_; ++i) a_[i].push_back(col[i]);
    ++n_;
  }

  void set_basis(std::vector<std::size_t> basis) { basis_ = std::move(basis); }
  const std::vector<std::size_t>& basis() const { return basis_; }

  // price out: reduced costs z_j = c_j - sum_i y_i a_ij with y from basis costs.
  // Only columns below `limit` may enter (phase 2 locks out artificials).
  bool iterate(const std::vector<Rational>& c, std::size_t limit) {
    while (true) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < limit; ++j) {  // Bland: smallest index
        Rational z(0);
        for (std::size_t i = 0; i < m_; ++i) z += c[basis_[i]] * a_[i][j];
        if (c[j] - z > Rational(0)) { enter = j; break; }
      }
      if (enter == n_) return true;  // optimal
      std::size_t leave = m_;
      Rational best(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (a_[i][enter] > Rational(0)) {
          Rational ratio = b_[i] / a_[i][enter];
          if (leave == m_ || ratio < best ||
              (ratio == best && basis_[i] < basis_[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave == m_) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  Rational objective(const std::vector<Rational>& c) const {
    Rational v(0);
    for (std::size_t i = 0; i < m_; ++i) v += c[basis_[i]] * b_[i];
    return v;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) x[basis_[i]] = b_[i];
    return x;
  }

  // Drive an artificial basic variable out of the basis if possible.
  bool pivot_out_artificial(std::size_t row, std::size_t num_real) {
    for (std::size_t j = 0; j < num_real; ++j) {
      if (!(a_[row][j] == Rational(0))) {
        pivot(row, j);
        return true;
      }
    }
    return false;  // row is redundant
  }

  void drop_row(std::size_t row) {
    a_.erase(a_.begin() + row);
    b_.erase(b_.begin() + row);
    basis_.erase(basis_.begin() + row);
    --m_;
  }

  std::size_t rows() const { return m_; }

 private:
  void pivot(std::size_t row, std::size_t col) {
    Rational p = a_[row][col];
    for (std::size_t j = 0; j < n_; ++j) a_[row][j] /= p;
    b_[row] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || a_[i][col].is_zero()) continue;
      Rational f = a_[i][col];
      for (std::size_t j = 0; j < n_; ++j) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::size_t m_, n_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_maximize(const std::vector<std::vector<Rational>>& a_in,
                     const std::vector<Rational>& b_in,
                     const std::vector<Rational>& c_in) {
  std::size_t m = a_in.size();
  std::size_t n = m ? a_in[0].size() : c_in.size();
  std::vector<std::vector<Rational>> a = a_in;
  std::vector<Rational> b = b_in;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < Rational(0)) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  }
  Tableau t(std::move(a), std::move(b));
  // phase 1: artificial variables
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> col(m, Rational(0));
    col[i] = Rational(1);
    t.append_column(col);
    basis[i] = n + i;
  }
  t.set_basis(basis);
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = Rational(-1);
  if (!t.iterate(phase1, t.cols())) throw std::logic_error("lp: phase 1 unbounded");
  if (!(t.objective(phase1) == Rational(0)))
    return {LpResult::Status::Infeasible, Rational(0), {}};
  // drive artificials out of the basis; rows that cannot pivot are redundant
  for (std::size_t i = t.rows(); i-- > 0;) {
    if (t.basis()[i] >= n) {
      if (!t.pivot_out_artificial(i, n)) t.drop_row(i);
    }
  }
  std::vector<Rational> phase2(t.cols(), Rational(0));
  for (std::size_t j = 0; j < n && j < c_in.size(); ++j) phase2[j] = c_in[j];
  if (!t.iterate(phase2, n))  // artificial columns may not re-enter
    return {LpResult::Status::Unbounded, Rational(0), {}};
  auto x = t.solution();
  x.resize(n, Rational(0));
  Rational obj(0);
  for (std::size_t j = 0; j < n && j < c_in.size(); ++j) obj += c_in[j] * x[j];
  return {LpResult::Status::Optimal, obj, std::move(x)};
}

bool cone_member(const std::vector<std::vector<Rational>>& generators,
                 const std::vector<Rational>& target) {
  if (generators.empty()) {
    for (const auto& v : target)
      if (!v.is_zero()) return false;
    return true;
  }
  std::size_t dim = target.size();
  std::size_t k = generators.size();
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(k, Rational(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = generators[j][i];
  std::vector<Rational> c(k, Rational(0));
  auto r = lp_maximize(a, target, c);
  return r.status == LpResult::Status::Optimal;
}

std::optional<Rational> cone_exit_threshold(const std::vector<std::vector<Rational>>& generators,
                                            const std::vector<Rational>& base,
                                            const std::vector<Rational>& dir) {
  // variables: lambda_1..lambda_k >= 0 and t >= 0 with
  //   sum lambda_j g_j - t * dir = base, maximize t
  std::size_t dim = base.size();
  std::size_t k = generators.size();
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(k + 1, Rational(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = generators[j][i];
  for (std::size_t i = 0; i < dim; ++i) a[i][k] = -dir[i];
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = Rational(1);
  auto r = lp_maximize(a, base, c);
  if (r.status == LpResult::Status::Infeasible) return std::nullopt;
  if (r.status == LpResult::Status::Unbounded)
    throw std::domain_error("cone_exit_threshold: unbounded direction");
  return r.objective;
}

}  // namespace fano216
