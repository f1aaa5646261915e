// Exact arithmetic tower: rationals, the golden field Q(sqrt5), quaternions
// over it, and the finite dictionary between icosahedral traces and
// theta values. No floating point is used anywhere in this header.
#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ico {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical rational n/d. Throws DivisionByZero for d == 0.
Rational make_rational(long n, long d = 1);
Rational make_rational(const Integer& n, const Integer& d);

// "p/q" or "p" (optionally signed). Throws ParseError.
Rational parse_rational(std::string_view text);
// Always "p/q" with q > 0, e.g. "3/1".
std::string to_string(const Rational& r);

// a + b*sqrt(5) with a, b rational. The pair (a, b) is canonical, so
// equality and hashing are componentwise.
class GoldenNum {
 public:
  GoldenNum() = default;
  GoldenNum(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  GoldenNum(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenNum sqrt5() { return {0, 1}; }
  // phi = (1 + sqrt5)/2 = 2 cos(pi/5)
  static GoldenNum phi();

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  GoldenNum conjugate() const { return {a_, -b_}; }
  // a^2 - 5 b^2, the field norm down to Q.
  Rational norm() const;
  GoldenNum inverse() const;

  GoldenNum& operator+=(const GoldenNum& o);
  GoldenNum& operator-=(const GoldenNum& o);
  GoldenNum& operator*=(const GoldenNum& o);
  GoldenNum& operator/=(const GoldenNum& o);

  friend GoldenNum operator+(GoldenNum x, const GoldenNum& y) { return x += y; }
  friend GoldenNum operator-(GoldenNum x, const GoldenNum& y) { return x -= y; }
  friend GoldenNum operator*(GoldenNum x, const GoldenNum& y) { return x *= y; }
  friend GoldenNum operator/(GoldenNum x, const GoldenNum& y) { return x /= y; }
  GoldenNum operator-() const { return {-a_, -b_}; }

  friend bool operator==(const GoldenNum& x, const GoldenNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Lexicographic on (a, b); a storage order, not the real ordering.
  friend std::strong_ordering operator<=>(const GoldenNum& x, const GoldenNum& y);

  // Sign of the real number a + b sqrt5.
  int sign() const;
  double to_double() const;

  // "p/q,r/s"
  std::string to_string() const;
  static GoldenNum parse(std::string_view text);

  std::size_t hash() const;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const GoldenNum& g);

// w + x i + y j + z k over Q(sqrt5). Under i = diag(i,-i), j = [[0,1],[-1,0]],
// k = [[0,i],[i,0]] the Hamilton product is the SL2 matrix product and the
// matrix trace is 2w.
struct Quat {
  GoldenNum w, x, y, z;

  static Quat identity() { return {1, 0, 0, 0}; }
  static Quat i() { return {0, 1, 0, 0}; }
  static Quat j() { return {0, 0, 1, 0}; }
  static Quat k() { return {0, 0, 0, 1}; }

  Quat conj() const { return {w, -x, -y, -z}; }
  GoldenNum norm() const { return w * w + x * x + y * y + z * z; }
  // conj / norm; throws DivisionByZero for the zero quaternion.
  Quat inverse() const;
  GoldenNum trace() const { return w + w; }

  friend Quat operator*(const Quat& p, const Quat& q);
  friend Quat operator-(const Quat& q) { return {-q.w, -q.x, -q.y, -q.z}; }
  friend Quat operator*(const GoldenNum& c, const Quat& q) {
    return {c * q.w, c * q.x, c * q.y, c * q.z};
  }
  friend bool operator==(const Quat&, const Quat&) = default;
  friend std::strong_ordering operator<=>(const Quat& p, const Quat& q);

  std::size_t hash() const;
};

std::ostream& operator<<(std::ostream& os, const Quat& q);

// The nine traces 2cos(pi*theta) that occur in the binary icosahedral group.
enum class Trace : std::uint8_t {
  Two,          // theta 0
  MinusTwo,     // theta 1
  Zero,         // theta 1/2
  One,          // theta 1/3
  MinusOne,     // theta 2/3
  Phi,          // theta 1/5
  MinusPhi,     // theta 4/5
  PhiMinusOne,  // theta 2/5
  OneMinusPhi,  // theta 3/5
};
inline constexpr int kTraceCount = 9;
inline constexpr std::array<Trace, kTraceCount> kAllTraces = {
    Trace::Two, Trace::MinusTwo, Trace::Zero, Trace::One, Trace::MinusOne,
    Trace::Phi, Trace::MinusPhi, Trace::PhiMinusOne, Trace::OneMinusPhi};

// A theta value in [0, 1]. Throws std::out_of_range outside that interval.
class ThetaValue {
 public:
  explicit ThetaValue(Rational v);
  const Rational& value() const { return v_; }
  friend bool operator==(const ThetaValue&, const ThetaValue&) = default;

 private:
  Rational v_;
};

const GoldenNum& trace_value(Trace t);
const Rational& trace_theta(Trace t);
// Both throw NotIcosahedralTrace when the argument is not in the dictionary.
Trace trace_from_value(const GoldenNum& v);
Trace trace_from_theta(const Rational& theta);

// The two directions of the trace <-> theta dictionary.
ThetaValue to_theta(const GoldenNum& trace);
GoldenNum to_trace(const ThetaValue& theta);

Trace negate(Trace t);
std::string to_string(Trace t);

}  // namespace ico

template <>
struct std::hash<ico::GoldenNum> {
  std::size_t operator()(const ico::GoldenNum& g) const { return g.hash(); }
};
template <>
struct std::hash<ico::Quat> {
  std::size_t operator()(const ico::Quat& q) const { return q.hash(); }
};
