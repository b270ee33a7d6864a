#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano216/cyclotomic.hpp"
#include "fano216/matrix.hpp"
#include "fano216/parallel.hpp"

namespace fano216 {

// 6x6 matrix with exactly one nonzero cyclotomic entry per row and column,
// stored sparsely: row i carries scale[i] in column perm[i].
class SignedMonomialMatrix {
 public:
  SignedMonomialMatrix();  // identity
  SignedMonomialMatrix(std::array<int, 6> perm, std::array<Cyclo, 6> scale);

  static SignedMonomialMatrix minus_identity();

  const std::array<int, 6>& perm() const { return perm_; }
  const std::array<Cyclo, 6>& scale() const { return scale_; }

  SignedMonomialMatrix operator*(const SignedMonomialMatrix& o) const;
  SignedMonomialMatrix inverse() const;
  SignedMonomialMatrix negated() const;

  friend bool operator==(const SignedMonomialMatrix& a, const SignedMonomialMatrix& b) {
    return a.perm_ == b.perm_ && a.scale_ == b.scale_;
  }
  friend bool operator<(const SignedMonomialMatrix& a, const SignedMonomialMatrix& b);

  Matrix<Cyclo> dense() const;
  std::string str() const;

 private:
  std::array<int, 6> perm_;    // row i has its entry in column perm_[i]
  std::array<Cyclo, 6> scale_;
};

struct FiniteMatrixGroup {
  std::vector<SignedMonomialMatrix> generators;
  std::vector<SignedMonomialMatrix> elements;  // sorted closure
  std::size_t order() const { return elements.size(); }
  bool contains(const SignedMonomialMatrix& m) const;
};

// Breadth-first closure under multiplication; throws "group too large or
// infinite" past the cap.
FiniteMatrixGroup group_closure(const std::vector<SignedMonomialMatrix>& gens,
                                std::size_t cap = 4096);

// Isomorphism-type key: order, abelian flag, exponent, element-order
// histogram and derived-subgroup order.
struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = true;
  long exponent = 1;
  std::vector<std::pair<long, std::size_t>> order_histogram;
  std::size_t derived_order = 0;

  friend bool operator==(const GroupFingerprint& a, const GroupFingerprint& b) {
    return a.order == b.order && a.abelian == b.abelian && a.exponent == b.exponent &&
           a.order_histogram == b.order_histogram && a.derived_order == b.derived_order;
  }
  std::string str() const;
};

// Fingerprint of the quotient of g modulo {+-I}; canonical coset
// representative is the lexicographically smaller of M and -M.
GroupFingerprint quotient_fingerprint(const FiniteMatrixGroup& g);

// The twelve nontrivial automorphism types plus "trivial"; fingerprints are
// generated at startup by brute force from explicit permutation
// presentations, never hand-entered.
const std::map<std::string, GroupFingerprint>& reference_fingerprints();

// Label of the quotient type, or "unknown <fingerprint>" when unmatched.
std::string identify_group(const FiniteMatrixGroup& g);

// Rank test on the 3x6 pencil matrix (ones row; a row; permuted row).
// In the singular case the first row's sixth entry is 0 and the permuted
// row's sixth entry is lambda^2 * a5.
bool pencil_invariant(const std::array<int, 6>& sigma, const std::vector<Cyclo>& a,
                      const std::optional<Cyclo>& lambda);

// Brute force over all 120 permutations of 5 indices: all (nu, c) with
// b_{nu(i)} = c * b_i + r for constants c != 0, r.
struct SkewSolution {
  std::array<int, 5> perm;
  Cyclo c;
};
std::vector<SkewSolution> skew_classify(const std::vector<Cyclo>& b,
                                        Exec mode = default_exec());

// Admissible sixth diagonal entries lambda with lambda^2 = c, as roots of
// unity in the smallest cyclotomic field. c must have order 1, 2, 4 or 5.
std::vector<Cyclo> singular_scaling_constraint(const Cyclo& c);

// Row space of {L_i(M x)} equals the row space of {L_i} for every generator.
bool plane_invariant(const FiniteMatrixGroup& g, const std::vector<std::vector<Cyclo>>& plane);

// A transcribed classification-table row.
struct TableRow {
  std::string label;
  bool singular = false;
  std::string claimed_type;
  std::vector<SignedMonomialMatrix> generators;          // without -I
  std::vector<std::vector<Cyclo>> plane;                 // three 6-term forms
  // pencil relations: rows of (coefficients of a0..a5, rhs 0) over a cyclotomic field
  std::vector<std::array<Cyclo, 6>> relations;
  std::string note;
};

struct RowReport {
  std::string label;
  bool pencil_ok = false;
  bool plane_ok = false;
  bool type_ok = false;
  std::string identified;
  std::vector<Cyclo> sample_a;
  bool passed() const { return pencil_ok && plane_ok && type_ok; }
};

// Samples an a-vector from the row's relation set, then checks pencil
// invariance of every generator, plane invariance, and the isomorphism type.
RowReport verify_table_row(const TableRow& row);

// Extracts the permutation and (for singular rows) the scaling lambda of a
// signed monomial matrix acting on the quadric pencil.
std::array<int, 6> permutation_of(const SignedMonomialMatrix& m);

}  // namespace fano216
