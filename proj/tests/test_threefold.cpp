#include <doctest.h>

#include "fano216/models.hpp"
#include "fano216/threefold.hpp"

using namespace fano216;

TEST_CASE("the family 2.16 path: tau, pieces, and S_X(S)") {
  ThreefoldModel m = load_threefold(default_data_dir(), "n216");
  Class2 s{Rational(1), Rational(-1)};
  DivisorPath1D path = threefold_path(m, m.anticanonical, {Rational(-1), Rational(1)});
  CHECK(path.tau == Rational(2));
  REQUIRE(path.pieces.size() == 2);
  // P(u) = (2-u)H - (1-u)E on [0,1], (2-u)H on [1,2]; N picks up (u-1)E
  CHECK(path.pieces[0].u_hi == Rational(1));
  CHECK(path.pieces[0].negative.h.is_zero());
  CHECK(path.pieces[0].negative.e.is_zero());
  CHECK(path.pieces[1].positive.e.is_zero());
  CHECK(path.pieces[1].negative.e.eval(Rational(2)) == Rational(1));

  // P(1/2)^3 = 23/2, matching the integrand at u = 1/2
  Poly cubed = cube_poly(m, path.pieces[0].positive);
  CHECK(cubed.eval(Rational(1, 2)) == Rational(23, 2));
  CHECK(cubed == Poly({Rational(22), Rational(-24), Rational(6)}));

  CHECK(s_threefold(m, path) == Rational(13, 22));

  // restriction cross-check: P(u)^2 . S must match the surface-side classes
  Poly sq0 = square_dot_poly(m, path.pieces[0].positive, s);
  CHECK(sq0 == Poly({Rational(8), Rational(-4)}));  // 4(2-u)
  Poly sq1 = square_dot_poly(m, path.pieces[1].positive, s);
  CHECK(sq1.eval(Rational(1)) == Rational(4));  // 4(2-u)^2 at u=1
}

TEST_CASE("nef base along a direction that stays nef gives a single piece") {
  ThreefoldModel m = load_threefold(default_data_dir(), "n216");
  // from -K towards -H: D(u) = (2-u)H - E reaches the common nef/effective
  // boundary ray H - E exactly at tau = 1 with no negative part
  DivisorPath1D path = threefold_path(m, m.anticanonical, {Rational(-1), Rational(0)});
  CHECK(path.tau == Rational(1));
  REQUIRE(path.pieces.size() == 1);
  CHECK(path.pieces[0].negative.h.is_zero());
  CHECK(path.pieces[0].negative.e.is_zero());
}

TEST_CASE("non-effective base errors") {
  ThreefoldModel m = load_threefold(default_data_dir(), "n216");
  CHECK_THROWS_AS(threefold_path(m, {Rational(-1), Rational(0)}, {Rational(0), Rational(1)}),
                  std::domain_error);
}

TEST_CASE("zero-length domain integrates to zero") {
  ThreefoldModel m = load_threefold(default_data_dir(), "n216");
  DivisorPath1D path;
  path.tau = Rational(0);
  PathPiece piece;
  piece.u_lo = piece.u_hi = Rational(0);
  piece.positive = ClassPath{Poly(Rational(2)), Poly(Rational(-1))};
  path.pieces.push_back(piece);
  CHECK(s_threefold(m, path) == Rational(0));
}
