#include "icosa/valentiner.hpp"

#include <boost/math/constants/constants.hpp>
#include <set>

#include "icosa/errors.hpp"
#include "icosa/expected.hpp"

namespace ico {

namespace {

Real real_of(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

Real real_of(const GoldenNum& g) { return real_of(g.rational_part()) + real_of(g.sqrt5_part()) * sqrt(Real(5)); }

ComplexMat3 identity3() {
  ComplexMat3 m;
  for (int i = 0; i < 3; ++i) m[i][i] = Complex(1);
  return m;
}

Complex scale(const Complex& z, const Real& c) { return {z.re * c, z.im * c}; }

}  // namespace

Complex Complex::exp_pi_i(const Rational& q) {
  Real x = boost::math::constants::pi<Real>() * real_of(q);
  return {cos(x), sin(x)};
}

Real Complex::abs() const { return sqrt(re * re + im * im); }

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  if (d == 0) throw DivisionByZero("complex division by zero");
  Complex n = a * b.conj();
  return {n.re / d, n.im / d};
}

ComplexMat3 operator*(const ComplexMat3& a, const ComplexMat3& b) {
  ComplexMat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

Complex trace(const ComplexMat3& m) { return m[0][0] + m[1][1] + m[2][2]; }

Complex det(const ComplexMat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

std::vector<ReflectionTriple> valentiner_triples() {
  const Complex w = Complex::exp_pi_i(Rational(2, 3));
  const Complex w2 = w * w;
  const Real tau = (1 + sqrt(Real(5))) / 2;
  const Complex ctau(tau);

  ComplexMat3 r1{};
  r1[0][1] = -w2;
  r1[1][0] = -w;
  r1[2][2] = Complex(1);

  // r2 = -1/2 [[-1, w tau, w^2/tau], [tau/w, 1/tau, w], [w/tau, w^2, -tau]]
  ComplexMat3 r2{};
  r2[0] = {Complex(-1), w * ctau, w2 / ctau};
  r2[1] = {ctau / w, Complex(1) / ctau, w};
  r2[2] = {w / ctau, w2, -ctau};
  for (auto& row : r2)
    for (auto& z : row) z = scale(z, Real(-0.5));

  ComplexMat3 r3 = identity3();
  r3[0][0] = Complex(-1);

  ComplexMat3 r1b{};
  r1b[0][2] = -w;
  r1b[1][1] = Complex(1);
  r1b[2][0] = -w2;

  const Real h(0.5);
  const Real a = (1 - tau) * h, b = tau * h;
  ComplexMat3 r1c{};
  r1c[0] = {Complex(a), Complex(b), Complex(h)};
  r1c[1] = {Complex(b), Complex(h), Complex(a)};
  r1c[2] = {Complex(h), Complex(a), Complex(b)};

  std::vector<ReflectionTriple> out;
  out.push_back({"standard", {r1, r2, r3}, {{Rational(5, 30), Rational(11, 30), Rational(29, 30)}}, 38});
  out.push_back({"sibling", {r1b, r2, r3}, {{Rational(5, 30), Rational(17, 30), Rational(23, 30)}}, 37});
  out.push_back({"tau", {r1c, r2, r3}, {{Rational(2, 12), Rational(5, 12), Rational(11, 12)}}, 46});
  return out;
}

Real reflection_defect(const ComplexMat3& r) {
  ComplexMat3 sq = r * r, id = identity3();
  Real worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::max(worst, (sq[i][j] - id[i][j]).abs());
  worst = std::max(worst, (det(r) + Complex(1)).abs());
  worst = std::max(worst, (trace(r) - Complex(1)).abs());
  return worst;
}

Real eigen_defect(const ReflectionTriple& t) {
  ComplexMat3 p = t.r[2] * t.r[1] * t.r[0];
  // x^3 - c2 x^2 + c1 x - c0
  Complex c2 = trace(p);
  Complex c1 = p[0][0] * p[1][1] - p[0][1] * p[1][0] + p[0][0] * p[2][2] - p[0][2] * p[2][0] + p[1][1] * p[2][2] -
               p[1][2] * p[2][1];
  Complex c0 = det(p);
  Real worst = 0;
  for (const auto& q : t.order.q) {
    Complex x = Complex::exp_pi_i(2 * q);
    Complex v = x * x * x - c2 * x * x + c1 * x - c0;
    worst = std::max(worst, v.abs());
  }
  return worst;
}

Sl2Invariants sl2_invariants(const std::array<ComplexMat3, 3>& r, const EigenOrder& order, const Real& tolerance) {
  const Complex ti = Complex::i();  // square root of det r_j = -1
  std::array<Complex, 3> n;
  for (int j = 0; j < 3; ++j) n[j] = Complex::exp_pi_i(order.q[j]);

  Sl2Invariants out;
  for (int j = 0; j < 3; ++j) out.numeric[j] = ti / n[0] + n[0] / ti;
  out.numeric[MTuple::M4] = n[1] / n[2] + n[2] / n[1];
  auto pair = [&](int j, int k) { return (trace(r[j] * r[k]) - Complex(1)) / (ti * ti); };
  out.numeric[MTuple::M12] = pair(0, 1);
  out.numeric[MTuple::M23] = pair(1, 2);
  out.numeric[MTuple::M13] = pair(0, 2);

  std::array<Trace, 7> codes{};
  out.max_error = 0;
  for (int s = 0; s < 7; ++s) {
    const Complex& z = out.numeric[s];
    Real best = -1;
    for (Trace t : kAllTraces) {
      Real d = (z - Complex(real_of(trace_value(t)))).abs();
      if (best < 0 || d < best) {
        best = d;
        codes[s] = t;
      }
    }
    if (best > tolerance)
      throw RecognitionFailed("slot " + std::to_string(s) + " is " + z.re.str(40) + " + " + z.im.str(10) +
                              "i, off by " + best.str(5));
    out.max_error = std::max(out.max_error, best);
  }
  out.m = MTuple(codes);
  return out;
}

std::vector<ValentinerMatch> run_valentiner(const Pipeline& P, const ClassTable& T, unsigned digits) {
  PrecisionGuard guard(digits);
  std::vector<ValentinerMatch> out;
  std::set<std::size_t> seen;
  for (const auto& triple : valentiner_triples()) {
    Real defect = 0;
    for (const auto& r : triple.r) defect = std::max(defect, reflection_defect(r));
    Real eig = eigen_defect(triple);
    const Real tol("1e-30");
    if (defect > tol) throw MatchFailed(triple.name + ": not a triple of reflections");
    if (eig > tol) throw MatchFailed(triple.name + ": eigenvalue order does not match r3 r2 r1");

    Sl2Invariants inv = sl2_invariants(triple.r, triple.order, tol);
    ValentinerMatch m;
    m.name = triple.name;
    m.m = inv.m;
    m.theta = theta_of(inv.m);
    m.max_error = inv.max_error.convert_to<double>();
    m.eigen_defect = eig.convert_to<double>();
    auto idx = P.S.index_of(inv.m);
    if (!idx) throw MatchFailed(triple.name + ": " + inv.m.to_string() + " is not in S");
    m.orbit = P.orbits.orbit_of[*idx];
    if (!seen.insert(m.orbit).second) throw MatchFailed(triple.name + ": orbit already used");

    const SolutionClass* cls = nullptr;
    for (std::size_t i = 0; i < T.classes.size(); ++i)
      if (T.orbit_index[i] == m.orbit) cls = &T.classes[i];
    if (!cls) throw MatchFailed(triple.name + ": orbit has no class");
    m.degree = cls->degree;
    m.genus = cls->genus;
    m.alcove_x60 = cls->alcove_x60;
    for (const auto& row : expected_table1())
      if (row.alcove_x60 == cls->alcove_x60) m.row = row.row;
    if (m.row != triple.expected_row)
      throw MatchFailed(triple.name + ": landed on row " + std::to_string(m.row) + ", expected " +
                        std::to_string(triple.expected_row));
    out.push_back(m);
  }
  return out;
}

}  // namespace ico
