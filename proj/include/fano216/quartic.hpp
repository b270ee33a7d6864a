#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fano216/cyclotomic.hpp"
#include "fano216/mpoly.hpp"

namespace fano216 {

// Coefficient data of the quadric pencil: alpha0, beta0 quadratic forms and
// alpha1..3, beta1..3 linear forms in x1, x2, x3.
struct PencilData {
  static constexpr std::size_t kVars = 3;

  MPoly alpha0{kVars}, alpha1{kVars}, alpha2{kVars}, alpha3{kVars};
  MPoly beta0{kVars}, beta1{kVars}, beta2{kVars}, beta3{kVars};

  void validate() const;  // degree constraints
};

struct DiscriminantCurve {
  MPoly delta;  // homogeneous quartic in x1, x2, x3 (or zero: degenerate)
  Rational det_constant;  // c with det(quadric matrix) = c * Delta', recorded
  bool degenerate() const { return delta.is_zero(); }
};

// The displayed 3x3 symmetric matrix of the fiber quadratic form in the
// normalized chart alpha1 = 1 (entries 2*alpha2^2, 2*alpha2*alpha3 - 1, ...).
// Errors when alpha1 is identically zero.
std::vector<std::vector<MPoly>> quadric_matrix(const PencilData& p);

// The expanded discriminant polynomial over eight scalar symbols
// a0..a3, b0..b3 (thirteen terms), and the closed form it must equal.
MPoly discriminant_reference_expanded();
MPoly discriminant_closed_form_symbolic();

// Verifies, once, that the closed form expands to the reference polynomial
// and that det(quadric matrix) = c * reference|_{a1=1}; returns c.
Rational discriminant_identity_constant();

// Closed-form discriminant of a concrete pencil; runs the symbolic identity
// check and records its constant.
DiscriminantCurve discriminant(const PencilData& p);

enum class FiberType { Smooth, TwoLines, DoubleLine };

// Classifies the conic over a point of P^2 by the rank of the restricted
// quadratic form (3 smooth, 2 two lines, 1 double line); rank 0 errors.
FiberType fiber_type(const PencilData& p, const std::array<Rational, 3>& point);

// Delta and all three partials vanish at the point.
bool singular_at(const DiscriminantCurve& d, const std::array<Cyclo, 3>& point);

enum class ExceptionalSurface { P1xP1, F2 };

// Rank of the coefficient matrix of alpha1..alpha3: 3 gives P1 x P1,
// 1 or 2 give the second Hirzebruch surface.
ExceptionalSurface exceptional_surface_type(const PencilData& p);

struct SingularPointAudit {
  std::array<Rational, 3> point;
  bool defined_over_k = true;
  bool group_fixed = false;
};

struct KStabilityCertificate {
  std::string verdict;   // "K-stable (Main Theorem)" or "inconclusive"
  std::string route;     // which corollary applies
  Rational det_constant;
  std::vector<std::string> notes;
};

// Verifies each audited point is singular, then applies the Main Theorem
// logic: K-stable when no singular point is simultaneously defined over k
// and fixed by the group.
KStabilityCertificate kstability_certificate(const DiscriminantCurve& d,
                                             const std::vector<SingularPointAudit>& audit);

PencilData parse_pencil(const std::string& text);

}  // namespace fano216
