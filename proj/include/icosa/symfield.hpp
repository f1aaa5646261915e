// Exact arithmetic in Q(s) and in the quadratic function field Q(s)[u]/(u^2 - f),
// with the derivation d/ds, plus the Painleve VI residual and helpers used to
// verify parametrised algebraic solutions.
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "icosa/poly.hpp"
#include "icosa/weyl.hpp"

namespace ico {

// num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);  // reduces; throws DivisionByZero

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc derivative() const;
  // Throws DivisionByZero at a pole.
  Rational eval(const Rational& s) const;
  std::string to_string(std::string_view var = "s") const;

 private:
  Poly num_, den_;
};

// a + b u where u^2 = f(s). With no modulus the element is rational (b = 0).
class CurveFieldElem {
 public:
  using Modulus = std::shared_ptr<const Poly>;

  CurveFieldElem() = default;
  CurveFieldElem(const RatFunc& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  CurveFieldElem(long c) : a_(c) {}  // NOLINT(google-explicit-constructor)
  CurveFieldElem(RatFunc a, RatFunc b, Modulus f);

  static CurveFieldElem s();
  static CurveFieldElem u(Modulus f);

  const RatFunc& a() const { return a_; }
  const RatFunc& b() const { return b_; }
  const Modulus& modulus() const { return f_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  CurveFieldElem operator-() const;
  friend CurveFieldElem operator+(const CurveFieldElem& x, const CurveFieldElem& y);
  friend CurveFieldElem operator-(const CurveFieldElem& x, const CurveFieldElem& y);
  friend CurveFieldElem operator*(const CurveFieldElem& x, const CurveFieldElem& y);
  friend CurveFieldElem operator/(const CurveFieldElem& x, const CurveFieldElem& y) { return x * y.inverse(); }
  // Equality as field elements; throws ModulusMismatch like the arithmetic.
  friend bool operator==(const CurveFieldElem& x, const CurveFieldElem& y) { return (x - y).is_zero(); }
  // Throws DivisionByZero.
  CurveFieldElem inverse() const;
  // (a + b u)' = a' + (b' + b f'/(2 f)) u
  CurveFieldElem derive() const;
  // a^2 - f b^2
  RatFunc norm() const;
  std::string to_string() const;

 private:
  RatFunc a_, b_;
  Modulus f_;
};

// Throws ModulusMismatch if both carry different moduli.
CurveFieldElem::Modulus common_modulus(const CurveFieldElem& x, const CurveFieldElem& y);

struct PviParams {
  Rational alpha, beta, gamma, delta;
};
// alpha = (theta4 - 1)^2 / 2, beta = -theta1^2 / 2, gamma = theta3^2 / 2,
// delta = (1 - theta2^2) / 2.
PviParams pvi_params(const ThetaVec& theta);

// Residual of PVI for y(s), t(s) with derivatives taken along s. Zero iff the
// pair solves the equation. Throws DegenerateParameterization if t is
// constant or the expression has a pole (y in {0, 1, t} identically).
CurveFieldElem pvi_residual(const CurveFieldElem& y, const CurveFieldElem& t, const ThetaVec& theta);

struct ImplicitTerm {
  int y_power = 0;
  int t_power = 0;
  Rational coeff;
};
// F(y(s), t(s)) by Horner; returns the value (zero when the relation holds).
CurveFieldElem eval_implicit(const std::vector<ImplicitTerm>& F, const CurveFieldElem& y, const CurveFieldElem& t);
bool check_implicit(const std::vector<ImplicitTerm>& F, const CurveFieldElem& y, const CurveFieldElem& t);

// lim y/t as the curve point approaches (s0, u0); u0 is required when the
// field has a modulus (and u0^2 = f(s0) != 0). Throws NotACommonZero if y
// and t do not both vanish there, LimitUndefined if the quotient has a pole
// or the point is a branch point.
Rational leading_coeff(const CurveFieldElem& y, const CurveFieldElem& t, const Rational& s0,
                       const std::optional<Rational>& u0 = std::nullopt);

// Power series of x at (s0, u0) in h = s - s0, truncated after `terms`
// coefficients, as (valuation, leading coefficients). Exposed for tests.
struct SeriesHead {
  int valuation = 0;  // may be negative
  std::vector<Rational> coeffs;  // coefficient of h^(valuation + i)
};
SeriesHead series_at(const CurveFieldElem& x, const Rational& s0, const std::optional<Rational>& u0, int terms);

}  // namespace ico
