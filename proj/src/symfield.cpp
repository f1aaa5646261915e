#include "icosa/symfield.hpp"

#include <limits>
#include <map>

#include "icosa/errors.hpp"

namespace ico {

// ---------------------------------------------------------------- RatFunc

namespace {

// num/den already coprime; scale so that den is monic.
RatFunc coprime(const Poly& num, const Poly& den);

}  // namespace

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
  } else {
    num_ = num;
    den_ = den;
  }
  Rational lc = den_.lc();
  if (lc != 1) {
    num_ = (Rational(1) / lc) * num_;
    den_ = den_.monic();
  }
}

namespace {

RatFunc coprime(const Poly& num, const Poly& den) {
  // The constructor's gcd is trivial here, but going through it keeps the
  // normalisation in one place. Skip it when we can.
  if (num.is_zero()) return RatFunc();
  if (den.degree() == 0) return RatFunc((Rational(1) / den.lc()) * num);
  return RatFunc(num, den);
}

}  // namespace

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

// Henrici's formulas: only gcds of the smaller pieces are ever taken.
RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const Poly& a = x.num_;
  const Poly& b = x.den_;
  const Poly& c = y.num_;
  const Poly& d = y.den_;
  if (b.degree() == 0 && d.degree() == 0) return RatFunc(Rational(1 / b.lc()) * a + Rational(1 / d.lc()) * c);
  Poly g = gcd(b, d);
  if (g.degree() <= 0) return coprime(a * d + c * b, b * d);
  Poly b1 = exact_div(b, g), d1 = exact_div(d, g);
  Poly n = a * d1 + c * b1;
  if (n.is_zero()) return RatFunc();
  Poly g2 = gcd(n, g);
  if (g2.degree() > 0) {
    n = exact_div(n, g2);
    return RatFunc(n, b1 * exact_div(d, g2));
  }
  return RatFunc(n, b1 * d);
}

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero() || y.is_zero()) return RatFunc();
  Poly a = x.num_, b = x.den_, c = y.num_, d = y.den_;
  Poly g1 = gcd(a, d);
  if (g1.degree() > 0) {
    a = exact_div(a, g1);
    d = exact_div(d, g1);
  }
  Poly g2 = gcd(c, b);
  if (g2.degree() > 0) {
    c = exact_div(c, g2);
    b = exact_div(b, g2);
  }
  return coprime(a * c, b * d);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return coprime(den_, num_);
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inverse(); }

RatFunc RatFunc::derivative() const {
  if (den_.degree() <= 0) return RatFunc(Rational(1 / den_.lc()) * num_.derivative());
  // (a/b)' = (a' b/g - a b'/g) / (b * b/g) with g = gcd(b, b')
  Poly db = den_.derivative();
  Poly g = gcd(den_, db);
  Poly bg = exact_div(den_, g);
  Poly n = num_.derivative() * bg - num_ * exact_div(db, g);
  return RatFunc(n, den_ * bg);
}

Rational RatFunc::eval(const Rational& s) const {
  Rational d = den_.eval(s);
  if (d == 0) throw DivisionByZero("pole at s = " + s.get_str());
  return num_.eval(s) / d;
}

std::string RatFunc::to_string(std::string_view var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// ---------------------------------------------------------- CurveFieldElem

CurveFieldElem::CurveFieldElem(RatFunc a, RatFunc b, Modulus f) : a_(std::move(a)), b_(std::move(b)), f_(std::move(f)) {
  if (!f_ && !b_.is_zero()) throw ModulusMismatch("u-part without a modulus");
}

CurveFieldElem CurveFieldElem::s() { return CurveFieldElem(RatFunc(Poly::x())); }

CurveFieldElem CurveFieldElem::u(Modulus f) { return CurveFieldElem(RatFunc(), RatFunc(1), std::move(f)); }

CurveFieldElem::Modulus common_modulus(const CurveFieldElem& x, const CurveFieldElem& y) {
  const auto& f = x.modulus();
  const auto& g = y.modulus();
  if (!f) return g;
  if (!g || f == g) return f;
  if (!(*f == *g)) throw ModulusMismatch("elements over different curves");
  return f;
}

CurveFieldElem CurveFieldElem::operator-() const { return CurveFieldElem(-a_, -b_, f_); }

CurveFieldElem operator+(const CurveFieldElem& x, const CurveFieldElem& y) {
  return CurveFieldElem(x.a_ + y.a_, x.b_ + y.b_, common_modulus(x, y));
}

CurveFieldElem operator-(const CurveFieldElem& x, const CurveFieldElem& y) {
  return CurveFieldElem(x.a_ - y.a_, x.b_ - y.b_, common_modulus(x, y));
}

CurveFieldElem operator*(const CurveFieldElem& x, const CurveFieldElem& y) {
  auto f = common_modulus(x, y);
  if (x.b_.is_zero() && y.b_.is_zero()) return CurveFieldElem(x.a_ * y.a_, RatFunc(), f);
  if (x.b_.is_zero()) return CurveFieldElem(x.a_ * y.a_, x.a_ * y.b_, f);
  if (y.b_.is_zero()) return CurveFieldElem(x.a_ * y.a_, x.b_ * y.a_, f);
  RatFunc a = x.a_ * y.a_ + x.b_ * y.b_ * RatFunc(*f);
  RatFunc b = x.a_ * y.b_ + x.b_ * y.a_;
  return CurveFieldElem(std::move(a), std::move(b), f);
}

RatFunc CurveFieldElem::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - b_ * b_ * RatFunc(*f_);
}

CurveFieldElem CurveFieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (b_.is_zero()) return CurveFieldElem(a_.inverse(), RatFunc(), f_);
  RatFunc n = norm();
  if (n.is_zero()) throw DivisionByZero("zero divisor (modulus is a square)");
  RatFunc in = n.inverse();
  return CurveFieldElem(a_ * in, -(b_ * in), f_);
}

CurveFieldElem CurveFieldElem::derive() const {
  if (b_.is_zero()) return CurveFieldElem(a_.derivative(), RatFunc(), f_);
  const Poly& f = *f_;
  RatFunc b = b_.derivative() + b_ * RatFunc(f.derivative(), Rational(2) * f);
  return CurveFieldElem(a_.derivative(), std::move(b), f_);
}

std::string CurveFieldElem::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  return a_.to_string() + " + (" + b_.to_string() + ")*u";
}

// ------------------------------------------------------------------- PVI

PviParams pvi_params(const ThetaVec& th) {
  PviParams p;
  p.alpha = (th[3] - 1) * (th[3] - 1) / 2;
  p.beta = -th[0] * th[0] / 2;
  p.gamma = th[2] * th[2] / 2;
  p.delta = (1 - th[1] * th[1]) / 2;
  return p;
}

namespace {

CurveFieldElem inv_or_degenerate(const CurveFieldElem& x, const char* what) {
  try {
    return x.inverse();
  } catch (const DivisionByZero&) {
    throw DegenerateParameterization(std::string(what) + " vanishes identically");
  }
}

CurveFieldElem scalar(const Rational& c) { return CurveFieldElem(RatFunc(c)); }

}  // namespace

CurveFieldElem pvi_residual(const CurveFieldElem& y, const CurveFieldElem& t, const ThetaVec& theta) {
  const PviParams p = pvi_params(theta);
  const CurveFieldElem dt = t.derive();
  if (dt.is_zero()) throw DegenerateParameterization("dt/ds vanishes identically");
  const CurveFieldElem idt = dt.inverse();
  const CurveFieldElem y1 = y.derive() * idt;
  const CurveFieldElem y2 = y1.derive() * idt;

  const CurveFieldElem one(1);
  const CurveFieldElem iy = inv_or_degenerate(y, "y");
  const CurveFieldElem iy1 = inv_or_degenerate(y - one, "y - 1");
  const CurveFieldElem iyt = inv_or_degenerate(y - t, "y - t");
  const CurveFieldElem it = inv_or_degenerate(t, "t");
  const CurveFieldElem it1 = inv_or_degenerate(t - one, "t - 1");

  CurveFieldElem rhs = scalar(Rational(1, 2)) * (iy + iy1 + iyt) * y1 * y1;
  rhs = rhs - (it + it1 + iyt) * y1;
  CurveFieldElem bracket = scalar(p.alpha);
  if (p.beta != 0) bracket = bracket + scalar(p.beta) * t * iy * iy;
  if (p.gamma != 0) bracket = bracket + scalar(p.gamma) * (t - one) * iy1 * iy1;
  if (p.delta != 0) bracket = bracket + scalar(p.delta) * t * (t - one) * iyt * iyt;
  // y(y-1)(y-t) / (t^2 (t-1)^2)
  CurveFieldElem w = y * (y - one) * (y - t) * (it * it1) * (it * it1);
  rhs = rhs + w * bracket;
  return y2 - rhs;
}

CurveFieldElem eval_implicit(const std::vector<ImplicitTerm>& F, const CurveFieldElem& y, const CurveFieldElem& t) {
  std::map<int, std::map<int, Rational>> by_y;
  for (const auto& term : F)
    if (term.coeff != 0) by_y[term.y_power][term.t_power] += term.coeff;
  if (by_y.empty()) return CurveFieldElem();

  auto horner_t = [&](const std::map<int, Rational>& row) {
    CurveFieldElem acc;
    int top = row.rbegin()->first;
    for (int j = top; j >= 0; --j) {
      acc = acc * t;
      auto it = row.find(j);
      if (it != row.end()) acc = acc + scalar(it->second);
    }
    return acc;
  };

  CurveFieldElem acc;
  const int top = by_y.rbegin()->first;
  for (int i = top; i >= 0; --i) {
    acc = acc * y;
    auto it = by_y.find(i);
    if (it != by_y.end()) acc = acc + horner_t(it->second);
  }
  return acc;
}

bool check_implicit(const std::vector<ImplicitTerm>& F, const CurveFieldElem& y, const CurveFieldElem& t) {
  return eval_implicit(F, y, t).is_zero();
}

// ------------------------------------------------------ local expansions

namespace {

using Series = std::vector<Rational>;  // power series coefficients in h

Series poly_series(const Poly& p, const Rational& s0, std::size_t n) {
  Series out(n);
  Poly q = p.shift(s0);
  for (std::size_t i = 0; i < n && static_cast<int>(i) <= q.degree(); ++i) out[i] = q.coeff(static_cast<int>(i));
  return out;
}

Series mul_series(const Series& a, const Series& b, std::size_t n) {
  Series out(n);
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// a / b for b[0] != 0.
Series div_series(const Series& a, const Series& b, std::size_t n) {
  Series q(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = k < a.size() ? a[k] : Rational(0);
    for (std::size_t i = 1; i <= k && i < b.size(); ++i) acc -= b[i] * q[k - i];
    q[k] = acc / b[0];
  }
  return q;
}

// Branch of sqrt(f) through u0 near s0.
Series sqrt_series(const Poly& f, const Rational& s0, const Rational& u0, std::size_t n) {
  Series F = poly_series(f, s0, n);
  if (F[0] == 0) throw LimitUndefined("branch point of the curve at s = " + s0.get_str());
  if (u0 * u0 != F[0]) throw NotACommonZero("u0^2 != f(s0)");
  Series c(n);
  c[0] = u0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = F[k];
    for (std::size_t i = 1; i < k; ++i) acc -= c[i] * c[k - i];
    c[k] = acc / (2 * u0);
  }
  return c;
}

int low(const Series& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

SeriesHead series_at(const CurveFieldElem& x, const Rational& s0, const std::optional<Rational>& u0, int terms) {
  SeriesHead out;
  const std::size_t n = static_cast<std::size_t>(terms);
  if (x.is_zero()) {
    out.valuation = std::numeric_limits<int>::max();
    out.coeffs.assign(n, 0);
    return out;
  }
  // x = (P + Q u) / R with polynomials P, Q, R.
  const Poly& An = x.a().num();
  const Poly& Ad = x.a().den();
  const Poly& Bn = x.b().num();
  const Poly& Bd = x.b().den();
  Poly P = An * Bd, Q = Bn * Ad, R = Ad * Bd;

  const int vR = R.shift(s0).low_order();
  Series num;
  int vN = 0;
  if (Q.is_zero()) {
    vN = P.shift(s0).low_order();
    num = poly_series(P, s0, static_cast<std::size_t>(vN) + n);
  } else {
    if (!u0) throw NotACommonZero("a point on the curve needs u0");
    // P + Q u vanishes to order at most that of its norm P^2 - Q^2 f.
    Poly M = P * P - Q * Q * *x.modulus();
    const int bound = M.shift(s0).low_order();
    const std::size_t len = static_cast<std::size_t>(bound) + n + 1;
    Series U = sqrt_series(*x.modulus(), s0, *u0, len);
    Series Ps = poly_series(P, s0, len);
    Series QU = mul_series(poly_series(Q, s0, len), U, len);
    for (std::size_t i = 0; i < len; ++i) Ps[i] += QU[i];
    vN = low(Ps);
    if (vN < 0) throw LimitUndefined("could not find the order of vanishing");
    num = std::move(Ps);
  }
  Series ntail(num.begin() + vN, num.end());
  Series Rs = poly_series(R, s0, static_cast<std::size_t>(vR) + n);
  Series dtail(Rs.begin() + vR, Rs.end());
  out.valuation = vN - vR;
  out.coeffs = div_series(ntail, dtail, n);
  return out;
}

Rational leading_coeff(const CurveFieldElem& y, const CurveFieldElem& t, const Rational& s0,
                       const std::optional<Rational>& u0) {
  common_modulus(y, t);
  SeriesHead sy = series_at(y, s0, u0, 1);
  SeriesHead st = series_at(t, s0, u0, 1);
  if (t.is_zero()) throw LimitUndefined("t vanishes identically");
  if (sy.valuation <= 0 || st.valuation <= 0)
    throw NotACommonZero("y and t do not both vanish at s = " + s0.get_str());
  if (y.is_zero() || sy.valuation > st.valuation) return 0;
  if (sy.valuation < st.valuation) throw LimitUndefined("y/t has a pole at s = " + s0.get_str());
  return sy.coeffs[0] / st.coeffs[0];
}

}  // namespace ico
