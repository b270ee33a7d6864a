#include <doctest.h>

#include <random>

#include "fano216/cyclotomic.hpp"

using namespace fano216;

TEST_CASE("defining relations of small roots of unity") {
  // zeta_4 * zeta_4 = -1
  CHECK(Cyclo::zeta(4) * Cyclo::zeta(4) == Cyclo(Rational(-1)));
  // zeta_5^4 * zeta_5 = 1
  CHECK(Cyclo::zeta(5, 4) * Cyclo::zeta(5) == Cyclo::one());
  // zeta_5^4 = -1 - z - z^2 - z^3 in the canonical basis
  Cyclo z5_4 = Cyclo::zeta(5).pow(4);
  std::vector<Rational> expect{Rational(-1), Rational(-1), Rational(-1), Rational(-1)};
  CHECK(z5_4.coeffs() == expect);
}

TEST_CASE("zeta_n^n = 1 and Phi_n(zeta_n) = 0 for every conductor used") {
  for (long n : {3L, 4L, 5L, 8L, 10L, 12L, 20L}) {
    Cyclo z = Cyclo::zeta(n);
    CHECK(z.pow(n) == Cyclo::one());
    // evaluate Phi_n at zeta_n inside the field
    const auto& phi = cyclotomic_poly(n);
    Cyclo acc = Cyclo::zero();
    Cyclo p = Cyclo::one();
    for (const auto& coef : phi) {
      acc = acc + Rational(coef) * p;
      p = p * z;
    }
    CHECK(acc.is_zero());
    CHECK(z.root_of_unity_order() == n);
  }
}

TEST_CASE("mixed-conductor promotion and the cap") {
  Cyclo i = Cyclo::zeta(4);
  Cyclo w = Cyclo::zeta(3);
  Cyclo prod = i * w;       // lives in Q(zeta_12)
  CHECK(prod.conductor() == 12);
  CHECK(prod == Cyclo::zeta(12, 7));  // i*w = z12^3 * z12^4
  CHECK_THROWS_WITH_AS(static_cast<void>(Cyclo::zeta(64) * Cyclo::zeta(80)),
                       "incompatible fields", std::domain_error);
}

TEST_CASE("field axioms on random cyclotomic samples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-4, 4);
  auto rnd = [&](long n) {
    std::vector<Rational> c(euler_phi(n));
    for (auto& x : c) x = Rational(d(rng));
    return Cyclo(n, std::move(c));
  };
  for (int i = 0; i < 40; ++i) {
    Cyclo a = rnd(12), b = rnd(12), c = rnd(12);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo::one());
  }
}

TEST_CASE("square roots as cyclotomic elements") {
  CHECK(cyclo_sqrt(2) * cyclo_sqrt(2) == Cyclo(Rational(2)));
  CHECK(cyclo_sqrt(3) * cyclo_sqrt(3) == Cyclo(Rational(3)));
  CHECK(cyclo_sqrt(5) * cyclo_sqrt(5) == Cyclo(Rational(5)));
}

TEST_CASE("expression parser") {
  CHECK(parse_cyclo("i*i") == Cyclo(Rational(-1)));
  CHECK(parse_cyclo("(1+i)*(1-i)") == Cyclo(Rational(2)));
  CHECK(parse_cyclo("z5^4*z5") == Cyclo::one());
  CHECK(parse_cyclo("-i/sqrt3") * parse_cyclo("-i/sqrt3") == Cyclo(Rational(-1, 3)));
  CHECK(parse_cyclo("(1+i*sqrt5)/2") + parse_cyclo("(1-i*sqrt5)/2") == Cyclo::one());
  CHECK(parse_cyclo("3/4") == Cyclo(Rational(3, 4)));
  CHECK_THROWS(parse_cyclo("z"));
  CHECK_THROWS(parse_cyclo("1+"));
}
