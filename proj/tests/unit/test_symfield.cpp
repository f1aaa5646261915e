#include <doctest.h>

#include <memory>
#include <random>

#include "icosa/catalog.hpp"
#include "icosa/errors.hpp"
#include "icosa/symfield.hpp"

using namespace ico;

namespace {

const Poly S = Poly::x();

CurveFieldElem::Modulus modulus(const Poly& f) { return std::make_shared<const Poly>(f); }

RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-6, 6), d(0, 3);
  auto poly = [&] {
    std::vector<Rational> v(d(rng) + 1);
    for (auto& x : v) x = c(rng);
    return Poly::from_coeffs(v);
  };
  Poly den = poly();
  while (den.is_zero()) den = poly();
  return RatFunc(poly(), den);
}

ThetaVec th(const char* text) { return parse_theta(text); }

}  // namespace

TEST_SUITE("symfield") {
  TEST_CASE("rational functions normalise") {
    RatFunc r(S * S - Poly(1), S - Poly(1));
    CHECK(r == RatFunc(S + Poly(1)));
    CHECK(r.den() == Poly(1));
    RatFunc h(Rational(2) * S, Rational(4) * S + Poly(2));
    CHECK(h.den().lc() == 1);
    CHECK(h.eval(1) == Rational(1, 3));
    CHECK_THROWS_AS(RatFunc(S, Poly()), DivisionByZero);
    CHECK_THROWS_AS(RatFunc(S, S - Poly(1)).eval(1), DivisionByZero);
    CHECK((RatFunc(S) / RatFunc(S)) == RatFunc(1));
  }

  TEST_CASE("curve field relations") {
    Poly f = S * (Rational(8) * S * S - Rational(11) * S + Poly(8));
    auto F = modulus(f);
    CurveFieldElem u = CurveFieldElem::u(F), s = CurveFieldElem::s();
    CHECK(u * u == CurveFieldElem(RatFunc(f)));
    CHECK((u * u).is_rational());
    CurveFieldElem a = s * s + CurveFieldElem(1), b = s - CurveFieldElem(3);
    CurveFieldElem x = a + b * u, xbar = a - b * u;
    CHECK(x * xbar == CurveFieldElem(x.norm()));
    CHECK(x * x.inverse() == CurveFieldElem(1));
    CHECK_THROWS_AS(CurveFieldElem().inverse(), DivisionByZero);
  }

  TEST_CASE("moduli must agree") {
    auto F = modulus(S), G = modulus(S + Poly(1));
    CHECK_THROWS_AS(CurveFieldElem::u(F) + CurveFieldElem::u(G), ModulusMismatch);
    auto F2 = modulus(S);  // equal value, different object
    CHECK_NOTHROW(CurveFieldElem::u(F) + CurveFieldElem::u(F2));
  }

  TEST_CASE("derivation") {
    CurveFieldElem s = CurveFieldElem::s();
    CHECK((s * s * s).derive() == CurveFieldElem(3) * s * s);
    Poly f = Rational(5) * S + Poly(1);
    auto F = modulus(f * (Rational(4) * S * S + S + Poly(1)));
    CurveFieldElem u = CurveFieldElem::u(F);
    RatFunc fp = RatFunc(F->derivative()), two_f = RatFunc(Rational(2) * *F);
    CHECK(u.derive() == CurveFieldElem(RatFunc(0), fp / two_f, F));
    // differentiating u^2 = f
    CHECK(CurveFieldElem(2) * u * u.derive() == CurveFieldElem(fp));
  }

  TEST_CASE("Leibniz rule on random elements") {
    std::mt19937 rng(9);
    auto F = modulus(S * S * S + Poly(2) * S + Poly(5));
    for (int trial = 0; trial < 40; ++trial) {
      CurveFieldElem x(random_ratfunc(rng), random_ratfunc(rng), F);
      CurveFieldElem y(random_ratfunc(rng), random_ratfunc(rng), F);
      REQUIRE((x * y).derive() == x.derive() * y + x * y.derive());
    }
  }

  TEST_CASE("PVI parameters") {
    PviParams p = pvi_params(th("1/3,1/5,1/5,2/3"));
    CHECK(p.alpha == Rational(1, 18));
    CHECK(p.beta == Rational(-1, 18));
    CHECK(p.gamma == Rational(1, 50));
    CHECK(p.delta == Rational(12, 25));
  }

  TEST_CASE("residuals") {
    CurveFieldElem s = CurveFieldElem::s();
    CHECK(pvi_residual(s, s * s, th("1/3,1/5,1/5,2/3")).is_zero());
    CHECK_FALSE(pvi_residual(s, s * s, th("1/3,1/5,1/5,1/3")).is_zero());
    const auto& B = find_entry("thmB");
    CHECK(pvi_residual(B.y, B.t, th("2/5,1/2,1/3,4/5")).is_zero());
    CHECK_THROWS_AS(pvi_residual(s, CurveFieldElem(3), th("1/3,1/5,1/5,2/3")), DegenerateParameterization);
  }

  TEST_CASE("implicit relations") {
    CurveFieldElem s = CurveFieldElem::s();
    std::vector<ImplicitTerm> y_minus_t{{1, 0, 1}, {0, 1, -1}};
    CHECK(check_implicit(y_minus_t, s, s));
    const auto& B = find_entry("sol33");
    CHECK_FALSE(check_implicit(y_minus_t, B.y, B.t));
    REQUIRE_FALSE(B.implicit.empty());
    CHECK(check_implicit(B.implicit, B.y, B.t));
  }

  TEST_CASE("leading coefficient") {
    CurveFieldElem s = CurveFieldElem::s();
    CHECK(leading_coeff(s, CurveFieldElem(2) * s, 0) == Rational(1, 2));
    CHECK(leading_coeff(s * s, s * s * s + s * s, 0) == 1);
    CHECK_THROWS_AS(leading_coeff(s + CurveFieldElem(1), s, 0), NotACommonZero);
    CHECK_THROWS_AS(leading_coeff(s, s * s, 0), LimitUndefined);
    CHECK(leading_coeff(find_entry("sol22").y, find_entry("sol22").t, 0) == Rational(1, 2));
    CHECK(leading_coeff(find_entry("sol29").y, find_entry("sol29").t, -2) == Rational(1, 2));
  }

  TEST_CASE("series on a branch") {
    auto F = modulus(S + Poly(1));  // u = sqrt(1 + s) = 1 + s/2 - s^2/8 + ...
    SeriesHead h = series_at(CurveFieldElem::u(F), 0, Rational(1), 3);
    CHECK(h.valuation == 0);
    CHECK(h.coeffs == std::vector<Rational>{1, Rational(1, 2), Rational(-1, 8)});
    SeriesHead g = series_at(CurveFieldElem::u(F), 0, Rational(-1), 2);
    CHECK(g.coeffs == std::vector<Rational>{-1, Rational(-1, 2)});
    CHECK(series_at(CurveFieldElem(RatFunc(Poly(1), S * S)), 0, std::nullopt, 1).valuation == -2);
  }
}
