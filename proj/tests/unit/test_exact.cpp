#include <doctest.h>

#include "icosa/errors.hpp"
#include "icosa/exact.hpp"
#include "icosa/group.hpp"

using namespace ico;

TEST_SUITE("exact") {
  TEST_CASE("golden field arithmetic") {
    CHECK(GoldenNum(0, 1) * GoldenNum(0, 1) == GoldenNum(5));
    const GoldenNum phi(Rational(1, 2), Rational(1, 2));
    CHECK(phi == GoldenNum::phi());
    CHECK(phi * phi == GoldenNum(Rational(3, 2), Rational(1, 2)));
    CHECK(phi * phi == phi + GoldenNum(1));
    CHECK(GoldenNum(1) / phi == GoldenNum(Rational(-1, 2), Rational(1, 2)));
    CHECK(GoldenNum(1) / phi == phi - GoldenNum(1));
    CHECK_THROWS_AS(GoldenNum(1) / GoldenNum(0), DivisionByZero);
  }

  TEST_CASE("sign and ordering of golden numbers") {
    CHECK(GoldenNum(Rational(1, 2), Rational(1, 2)).sign() == 1);
    CHECK(GoldenNum(Rational(1, 2), Rational(-1, 2)).sign() == -1);  // 1 - phi
    CHECK(GoldenNum(-2, 1).sign() == 1);                            // sqrt5 > 2
    CHECK(GoldenNum(-3, 1).sign() == -1);
    CHECK(GoldenNum(0).sign() == 0);
  }

  TEST_CASE("parse and print") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    GoldenNum g(Rational(-1, 2), Rational(3, 4));
    CHECK(GoldenNum::parse(g.to_string()) == g);
  }

  TEST_CASE("quaternion relations") {
    CHECK(Quat::i() * Quat::j() == Quat::k());
    CHECK(Quat::j() * Quat::k() == Quat::i());
    CHECK(Quat::j() * Quat::i() == -Quat::k());
    const GoldenNum h(Rational(1, 2));
    Quat g1{-h, h, h, h};
    Quat g = g1 * Quat{0, h, GoldenNum(Rational(-1, 4), Rational(1, 4)), GoldenNum(Rational(1, 4), Rational(1, 4))};
    CHECK(g * g.inverse() == Quat::identity());
    CHECK(g.norm() == GoldenNum(1));
  }

  TEST_CASE("product of the two generators has trace -phi") {
    const GoldenNum h(Rational(1, 2));
    Quat g1{-h, h, h, h};
    // (i + sigma j + tau k)/2, sigma = (sqrt5-1)/2, tau = (sqrt5+1)/2
    Quat g2{0, h, GoldenNum(Rational(-1, 4), Rational(1, 4)), GoldenNum(Rational(1, 4), Rational(1, 4))};
    CHECK(g1 == generator1());
    CHECK(g2 == generator2());
    Quat p = g2 * g1;
    CHECK(p.w == GoldenNum(Rational(-1, 4), Rational(-1, 4)));
    CHECK(p.trace() == -GoldenNum::phi());
  }

  TEST_CASE("trace dictionary") {
    CHECK(to_theta(GoldenNum::phi()).value() == Rational(1, 5));
    CHECK(to_theta(GoldenNum(0)).value() == Rational(1, 2));
    CHECK(to_theta(GoldenNum(2)).value() == 0);
    CHECK(to_theta(GoldenNum(-2)).value() == 1);
    CHECK_THROWS_AS(to_theta(GoldenNum(Rational(3, 2))), NotIcosahedralTrace);
    CHECK_THROWS_AS(trace_from_theta(Rational(1, 7)), NotIcosahedralTrace);
    for (Trace t : kAllTraces) {
      CHECK(trace_from_value(trace_value(t)) == t);
      CHECK(trace_from_theta(trace_theta(t)) == t);
      CHECK(to_trace(to_theta(trace_value(t))) == trace_value(t));
      // 2cos(pi(1 - x)) = -2cos(pi x)
      CHECK(trace_value(negate(t)) == -trace_value(t));
      CHECK(trace_theta(negate(t)) == 1 - trace_theta(t));
    }
  }

  TEST_CASE("theta values live in [0, 1]") {
    CHECK_THROWS_AS(ThetaValue(Rational(-1, 3)), std::out_of_range);
    CHECK_THROWS_AS(ThetaValue(Rational(4, 3)), std::out_of_range);
    CHECK(ThetaValue(1).value() == 1);
  }
}
