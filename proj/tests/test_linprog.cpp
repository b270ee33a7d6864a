#include <doctest.h>

#include "fano216/linprog.hpp"

using namespace fano216;

TEST_CASE("cone membership in the quadrant") {
  std::vector<std::vector<Rational>> gens{{Rational(1), Rational(0)},
                                          {Rational(0), Rational(1)}};
  CHECK(cone_member(gens, {Rational(2), Rational(3)}));
  CHECK_FALSE(cone_member(gens, {Rational(-1), Rational(1)}));
  CHECK(cone_member(gens, {Rational(0), Rational(0)}));
}

TEST_CASE("exit threshold is exact") {
  // cone((1,0),(1,2)); from (1,1) along (0,1): leaves at v = 1
  std::vector<std::vector<Rational>> gens{{Rational(1), Rational(0)},
                                          {Rational(1), Rational(2)}};
  auto t = cone_exit_threshold(gens, {Rational(1), Rational(1)}, {Rational(0), Rational(1)});
  REQUIRE(t.has_value());
  CHECK(*t == Rational(1));
  // outside the cone to start with
  CHECK_FALSE(cone_exit_threshold(gens, {Rational(-1), Rational(0)},
                                  {Rational(0), Rational(1)}).has_value());
  // unbounded direction
  CHECK_THROWS_AS(cone_exit_threshold(gens, {Rational(1), Rational(0)},
                                      {Rational(1), Rational(1)}),
                  std::domain_error);
}

TEST_CASE("redundant equalities are handled") {
  // same constraint twice
  std::vector<std::vector<Rational>> a{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
  std::vector<Rational> b{Rational(1), Rational(2)};
  auto r = lp_maximize(a, b, {Rational(1), Rational(0)});
  CHECK(r.status == LpResult::Status::Optimal);
  CHECK(r.objective == Rational(1));
}
