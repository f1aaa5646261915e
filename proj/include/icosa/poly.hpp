// Univariate polynomials over Q, stored as a rational content times a
// primitive integer polynomial with positive leading coefficient.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "icosa/exact.hpp"

namespace ico {

class Poly {
 public:
  Poly() = default;  // zero
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly x();
  // Coefficients lowest degree first.
  static Poly from_coeffs(const std::vector<Rational>& c);
  static Poly from_strings(const std::vector<std::string>& c);
  // Takes ownership of an integer coefficient vector times a scalar.
  static Poly from_integers(std::vector<Integer> c, const Rational& scale = 1);

  bool is_zero() const { return prim_.empty(); }
  int degree() const { return static_cast<int>(prim_.size()) - 1; }  // -1 for zero
  Rational coeff(int i) const;
  Rational lc() const { return coeff(degree()); }
  std::vector<Rational> coeffs() const;
  const Rational& content() const { return content_; }
  const std::vector<Integer>& primitive() const { return prim_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.prim_ == b.prim_ && (a.is_zero() || a.content_ == b.content_);
  }

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  Poly monic() const;
  // Coefficients of p(s0 + h) in h.
  Poly shift(const Rational& s0) const;
  // Largest e with h^e | p (p nonzero).
  int low_order() const;

  // "3/2*s^2 - s + 1"
  std::string to_string(std::string_view var = "s") const;

 private:
  void normalize(std::vector<Integer> c, Rational scale);
  Rational content_{0};
  std::vector<Integer> prim_;
};

// Exact quotient a / b; throws DivisionByZero or std::domain_error if b does
// not divide a.
Poly exact_div(const Poly& a, const Poly& b);
// Quotient and remainder over Q.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Primitive gcd (integer coefficients, positive leading coefficient), 1 if
// both are constants. gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

namespace poly_detail {
// Exposed for tests: heuristic gcd of primitive integer polynomials, and the
// subresultant-free primitive remainder sequence it falls back to.
std::vector<Integer> gcd_heu(const std::vector<Integer>& a, const std::vector<Integer>& b, bool* fell_back = nullptr);
std::vector<Integer> gcd_prs(std::vector<Integer> a, std::vector<Integer> b);
}  // namespace poly_detail

}  // namespace ico
