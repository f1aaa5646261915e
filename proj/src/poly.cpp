#include "icosa/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "icosa/errors.hpp"

namespace ico {

using IVec = std::vector<Integer>;

namespace {

void trim(IVec& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Integer content_of(const IVec& c) {
  Integer g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides out the content and makes the leading coefficient positive.
IVec primitive_part(IVec c) {
  trim(c);
  if (c.empty()) return c;
  Integer g = content_of(c);
  if (c.back() < 0) g = -g;
  if (g != 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return c;
}

IVec mul_z(const IVec& a, const IVec& b) {
  if (a.empty() || b.empty()) return {};
  IVec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

// Exact division in Z[x]; false if b does not divide a.
bool div_z(const IVec& a, const IVec& b, IVec* q) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.empty()) {
    if (q) q->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  IVec r = a;
  const std::size_t db = b.size() - 1;
  IVec quot(a.size() - db);
  const Integer& lb = b.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer& top = r[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    Integer qi;
    mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), qi.get_mpz_t(), b[j].get_mpz_t());
    quot[i] = std::move(qi);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  if (q) *q = std::move(quot);
  return true;
}

Integer max_norm(const IVec& c) {
  Integer m = 0;
  for (const auto& x : c)
    if (abs(x) > m) m = abs(x);
  return m;
}

Integer eval_z(const IVec& c, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

// Symmetric x-adic digits of h.
IVec interpolate(Integer h, const Integer& x) {
  IVec out;
  Integer half = x / 2;
  while (h != 0) {
    Integer g;
    mpz_mod(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (g > half) g -= x;
    out.push_back(g);
    h -= g;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  return out;
}

}  // namespace

namespace poly_detail {

IVec gcd_prs(IVec a, IVec b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return {1};
    // pseudo-remainder of a by b
    IVec r = a;
    const Integer lb = b.back();
    while (r.size() >= b.size()) {
      const std::size_t shift = r.size() - b.size();
      const Integer lr = r.back();
      for (auto& x : r) x *= lb;
      for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
      r.pop_back();
      trim(r);
      r = primitive_part(std::move(r));
    }
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  return a;
}

IVec gcd_heu(const IVec& a, const IVec& b, bool* fell_back) {
  if (fell_back) *fell_back = false;
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  if (a.size() == 1 || b.size() == 1) return {1};
  IVec f = primitive_part(a), g = primitive_part(b);

  const Integer fn = max_norm(f), gn = max_norm(g);
  const Integer B = 2 * std::min(fn, gn) + 29;
  Integer sq;
  mpz_sqrt(sq.get_mpz_t(), B.get_mpz_t());
  Integer x = std::min(B, Integer(99 * sq));
  Integer alt = 2 * std::min(Integer(fn / abs(f.back())), Integer(gn / abs(g.back()))) + 2;
  if (alt > x) x = alt;

  for (int attempt = 0; attempt < 6; ++attempt) {
    // Evaluations of size deg * log x bits; stop if that gets silly.
    if (mpz_sizeinbase(x.get_mpz_t(), 2) * std::max(f.size(), g.size()) > 4'000'000) break;
    Integer fv = eval_z(f, x), gv = eval_z(g, x), v;
    mpz_gcd(v.get_mpz_t(), fv.get_mpz_t(), gv.get_mpz_t());
    if (v != 0) {
      IVec h = primitive_part(interpolate(v, x));
      if (!h.empty() && div_z(f, h, nullptr) && div_z(g, h, nullptr)) return h;
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
    x = 73794 * x * r / 27011;
  }
  if (fell_back) *fell_back = true;
  return gcd_prs(std::move(f), std::move(g));
}

}  // namespace poly_detail

void Poly::normalize(IVec c, Rational scale) {
  trim(c);
  if (c.empty() || scale == 0) {
    prim_.clear();
    content_ = 0;
    return;
  }
  Integer g = content_of(c);
  if (c.back() < 0) g = -g;
  if (g != 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  prim_ = std::move(c);
  content_ = scale * g;
  content_.canonicalize();
}

Poly::Poly(const Rational& c) {
  if (c != 0) normalize({Integer(1)}, c);
}

Poly Poly::x() { return from_integers({0, 1}); }

Poly Poly::from_integers(IVec c, const Rational& scale) {
  Poly p;
  p.normalize(std::move(c), scale);
  return p;
}

Poly Poly::from_coeffs(const std::vector<Rational>& c) {
  Integer L = 1;
  for (const auto& q : c) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), q.get_den_mpz_t());
  IVec z(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) z[i] = c[i].get_num() * (L / c[i].get_den());
  return from_integers(std::move(z), Rational(1) / L);
}

Poly Poly::from_strings(const std::vector<std::string>& c) {
  std::vector<Rational> q;
  q.reserve(c.size());
  for (const auto& s : c) q.push_back(parse_rational(s));
  return from_coeffs(q);
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return content_ * prim_[static_cast<std::size_t>(i)];
}

std::vector<Rational> Poly::coeffs() const {
  std::vector<Rational> out;
  for (int i = 0; i <= degree(); ++i) out.push_back(coeff(i));
  return out;
}

Poly Poly::operator-() const {
  Poly r = *this;
  r.content_ = -r.content_;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // (p/q) A + (r/s) B = (ca A + cb B) * g / L
  const Rational& x = a.content_;
  const Rational& y = b.content_;
  Integer L;
  mpz_lcm(L.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
  Integer ca = x.get_num() * (L / x.get_den());
  Integer cb = y.get_num() * (L / y.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  mpz_divexact(ca.get_mpz_t(), ca.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(cb.get_mpz_t(), cb.get_mpz_t(), g.get_mpz_t());
  IVec c(std::max(a.prim_.size(), b.prim_.size()));
  for (std::size_t i = 0; i < a.prim_.size(); ++i) mpz_mul(c[i].get_mpz_t(), ca.get_mpz_t(), a.prim_[i].get_mpz_t());
  for (std::size_t i = 0; i < b.prim_.size(); ++i) mpz_addmul(c[i].get_mpz_t(), cb.get_mpz_t(), b.prim_[i].get_mpz_t());
  return Poly::from_integers(std::move(c), Rational(g, L));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly r;
  // Gauss: the product of primitive polynomials is primitive.
  r.prim_ = mul_z(a.prim_, b.prim_);
  r.content_ = a.content_ * b.content_;
  return r;
}

Poly operator*(const Rational& c, const Poly& a) {
  if (c == 0 || a.is_zero()) return {};
  Poly r = a;
  r.content_ *= c;
  return r;
}

Poly Poly::derivative() const {
  if (degree() < 1) return {};
  IVec c(prim_.size() - 1);
  for (std::size_t i = 1; i < prim_.size(); ++i) c[i - 1] = prim_[i] * static_cast<unsigned long>(i);
  return from_integers(std::move(c), content_);
}

Rational Poly::eval(const Rational& x) const {
  if (is_zero()) return 0;
  // Homogenised Horner keeps everything integral until the final division.
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc = prim_.back(), qpow = 1;
  for (std::size_t i = prim_.size() - 1; i-- > 0;) {
    qpow *= q;
    acc = acc * p + prim_[i] * qpow;
  }
  Rational r(acc, qpow);
  r.canonicalize();
  return content_ * r;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  r.content_ = Rational(1) / Rational(prim_.back());
  return r;
}

Poly Poly::shift(const Rational& s0) const {
  if (is_zero() || s0 == 0) return *this;
  std::vector<Rational> c = coeffs();
  const std::size_t n = c.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i-- > k;) c[i] += s0 * c[i + 1];
  return from_coeffs(c);
}

int Poly::low_order() const {
  int e = 0;
  while (e <= degree() && prim_[static_cast<std::size_t>(e)] == 0) ++e;
  return e;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i));
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return out;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return {};
  IVec q;
  if (!div_z(a.primitive(), b.primitive(), &q)) throw std::domain_error("exact_div: divisor does not divide");
  return Poly::from_integers(std::move(q), a.content() / b.content());
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lb = b.lc();
  const std::vector<Rational> bc = b.coeffs();
  for (int i = a.degree() - db; i >= 0; --i) {
    Rational qi = r[static_cast<std::size_t>(i + db)] / lb;
    if (qi != 0)
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i + j)] -= qi * bc[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i)] = qi;
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly::from_coeffs(q), Poly::from_coeffs(r)};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return Poly::from_integers(poly_detail::gcd_heu(a.primitive(), b.primitive()));
}

}  // namespace ico
