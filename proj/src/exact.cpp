#include "icosa/exact.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "icosa/errors.hpp"

namespace ico {

Rational make_rational(long n, long d) {
  return make_rational(Integer(n), Integer(d));
}

Rational make_rational(const Integer& n, const Integer& d) {
  if (sgn(d) == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
  };
  auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? "1" : trim(text.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den))
    throw ParseError("not a rational: '" + std::string(text) + "'");
  return make_rational(to_int(num), to_int(den));
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---------------------------------------------------------------- GoldenNum

GoldenNum GoldenNum::phi() { return {make_rational(1, 2), make_rational(1, 2)}; }

Rational GoldenNum::norm() const { return a_ * a_ - 5 * b_ * b_; }

GoldenNum GoldenNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt5)");
  Rational n = norm();
  return {a_ / n, -b_ / n};
}

GoldenNum& GoldenNum::operator+=(const GoldenNum& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenNum& GoldenNum::operator-=(const GoldenNum& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenNum& GoldenNum::operator*=(const GoldenNum& o) {
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

GoldenNum& GoldenNum::operator/=(const GoldenNum& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const GoldenNum& x, const GoldenNum& y) {
  int c = cmp(x.a_, y.a_);
  if (c == 0) c = cmp(x.b_, y.b_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

int GoldenNum::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 5 b^2.
  int c = cmp(a_ * a_, 5 * b_ * b_);
  if (c == 0) return 0;  // unreachable for rational a, b
  return c > 0 ? sa : sb;
}

double GoldenNum::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(5.0); }

std::string GoldenNum::to_string() const { return ico::to_string(a_) + "," + ico::to_string(b_); }

GoldenNum GoldenNum::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("golden number needs 'a,b': '" + std::string(text) + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

namespace {
std::size_t hash_mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}
std::size_t hash_rational(const Rational& r) {
  std::size_t h = mpz_get_ui(r.get_num_mpz_t()) * (sgn(r) < 0 ? 31 : 17);
  return hash_mix(h, mpz_get_ui(r.get_den_mpz_t()));
}
}  // namespace

std::size_t GoldenNum::hash() const { return hash_mix(hash_rational(a_), hash_rational(b_)); }

std::ostream& operator<<(std::ostream& os, const GoldenNum& g) {
  if (sgn(g.sqrt5_part()) == 0) return os << g.rational_part();
  if (sgn(g.rational_part()) != 0) os << g.rational_part() << (sgn(g.sqrt5_part()) > 0 ? "+" : "");
  return os << g.sqrt5_part() << "*sqrt5";
}

// --------------------------------------------------------------------- Quat

Quat operator*(const Quat& p, const Quat& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

Quat Quat::inverse() const {
  GoldenNum n = norm();
  if (n.is_zero()) throw DivisionByZero("inverse of the zero quaternion");
  GoldenNum r = n.inverse();
  return r * conj();
}

std::strong_ordering operator<=>(const Quat& p, const Quat& q) {
  if (auto c = p.w <=> q.w; c != 0) return c;
  if (auto c = p.x <=> q.x; c != 0) return c;
  if (auto c = p.y <=> q.y; c != 0) return c;
  return p.z <=> q.z;
}

std::size_t Quat::hash() const {
  std::size_t h = w.hash();
  h = hash_mix(h, x.hash());
  h = hash_mix(h, y.hash());
  return hash_mix(h, z.hash());
}

std::ostream& operator<<(std::ostream& os, const Quat& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

// --------------------------------------------------------------- dictionary

namespace {

struct DictEntry {
  Trace trace;
  GoldenNum value;
  Rational theta;
  const char* name;
};

const std::array<DictEntry, kTraceCount>& dictionary() {
  static const std::array<DictEntry, kTraceCount> table = [] {
    Rational half = make_rational(1, 2);
    return std::array<DictEntry, kTraceCount>{{
        {Trace::Two, GoldenNum(2), 0, "2"},
        {Trace::MinusTwo, GoldenNum(-2), 1, "-2"},
        {Trace::Zero, GoldenNum(0), half, "0"},
        {Trace::One, GoldenNum(1), make_rational(1, 3), "1"},
        {Trace::MinusOne, GoldenNum(-1), make_rational(2, 3), "-1"},
        {Trace::Phi, GoldenNum(half, half), make_rational(1, 5), "phi"},
        {Trace::MinusPhi, GoldenNum(-half, -half), make_rational(4, 5), "-phi"},
        {Trace::PhiMinusOne, GoldenNum(-half, half), make_rational(2, 5), "phi-1"},
        {Trace::OneMinusPhi, GoldenNum(half, -half), make_rational(3, 5), "1-phi"},
    }};
  }();
  return table;
}

}  // namespace

ThetaValue::ThetaValue(Rational v) : v_(std::move(v)) {
  if (sgn(v_) < 0 || v_ > 1)
    throw std::out_of_range("theta value outside [0,1]: " + ico::to_string(v_));
}

const GoldenNum& trace_value(Trace t) { return dictionary()[static_cast<int>(t)].value; }
const Rational& trace_theta(Trace t) { return dictionary()[static_cast<int>(t)].theta; }

Trace trace_from_value(const GoldenNum& v) {
  for (const auto& e : dictionary())
    if (e.value == v) return e.trace;
  throw NotIcosahedralTrace(v.to_string());
}

Trace trace_from_theta(const Rational& theta) {
  for (const auto& e : dictionary())
    if (e.theta == theta) return e.trace;
  throw NotIcosahedralTrace("theta " + ico::to_string(theta));
}

ThetaValue to_theta(const GoldenNum& trace) { return ThetaValue(trace_theta(trace_from_value(trace))); }

GoldenNum to_trace(const ThetaValue& theta) { return trace_value(trace_from_theta(theta.value())); }

Trace negate(Trace t) {
  switch (t) {
    case Trace::Two: return Trace::MinusTwo;
    case Trace::MinusTwo: return Trace::Two;
    case Trace::Zero: return Trace::Zero;
    case Trace::One: return Trace::MinusOne;
    case Trace::MinusOne: return Trace::One;
    case Trace::Phi: return Trace::MinusPhi;
    case Trace::MinusPhi: return Trace::Phi;
    case Trace::PhiMinusOne: return Trace::OneMinusPhi;
    case Trace::OneMinusPhi: return Trace::PhiMinusOne;
  }
  return t;
}

std::string to_string(Trace t) { return dictionary()[static_cast<int>(t)].name; }

}  // namespace ico
