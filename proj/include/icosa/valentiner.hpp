// From triples of complex reflections generating the Valentiner group to
// seven-tuples of SL2 traces, in high-precision floating point with exact
// recognition at the end.
#pragma once

#include <array>
#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <vector>

#include "icosa/classify.hpp"
#include "icosa/group.hpp"

namespace ico {

using Real = boost::multiprecision::mpfr_float;

struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT(google-explicit-constructor)
  static Complex i() { return {0, 1}; }
  // exp(pi i q)
  static Complex exp_pi_i(const Rational& q);

  Complex conj() const { return {re, -im}; }
  Real abs() const;
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex operator-() const { return {-re, -im}; }
};

using ComplexMat3 = std::array<std::array<Complex, 3>, 3>;

ComplexMat3 operator*(const ComplexMat3& a, const ComplexMat3& b);
Complex trace(const ComplexMat3& m);
Complex det(const ComplexMat3& m);

// Sets the working precision in decimal digits for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// The eigenvalues of r3 r2 r1 as exp(2 pi i q_j), in the chosen order; the
// square roots used are n_j = exp(pi i q_j).
struct EigenOrder {
  std::array<Rational, 3> q;
};

struct ReflectionTriple {
  std::string name;
  std::array<ComplexMat3, 3> r;
  EigenOrder order;
  int expected_row = 0;
};

// The three generating triples (standard, sibling, tau-reflection). Build
// them after setting the precision.
std::vector<ReflectionTriple> valentiner_triples();

// max(|r^2 - 1|, |det r + 1|, |tr r - 1|)
Real reflection_defect(const ComplexMat3& r);
// max_j |char poly of r3 r2 r1 at exp(2 pi i q_j)|
Real eigen_defect(const ReflectionTriple& t);

struct Sl2Invariants {
  std::array<Complex, 7> numeric;  // m1 m2 m3 m4 m12 m23 m13
  MTuple m;
  Real max_error;  // distance to the recognised exact values
};

// Throws RecognitionFailed if some value is not within `tolerance` of one of
// the nine icosahedral traces.
Sl2Invariants sl2_invariants(const std::array<ComplexMat3, 3>& r, const EigenOrder& order,
                             const Real& tolerance = Real("1e-30"));

struct ValentinerMatch {
  std::string name;
  MTuple m;
  ThetaVec theta;
  double max_error = 0;
  double eigen_defect = 0;
  std::size_t orbit = 0;
  int row = 0;  // reference row matched by the orbit's class
  int degree = 0;
  int genus = 0;
  std::array<int, 4> alcove_x60{};
};

// Runs all three triples and locates their orbits. Throws MatchFailed if a
// tuple is not in S, two land in the same orbit, or a row differs from the
// expected one.
std::vector<ValentinerMatch> run_valentiner(const Pipeline& P, const ClassTable& T, unsigned digits = 60);

}  // namespace ico
