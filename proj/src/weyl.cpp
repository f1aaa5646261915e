#include "icosa/weyl.hpp"

#include <sstream>

#include "icosa/errors.hpp"

namespace ico {

ThetaVec theta_of(const MTuple& m) {
  return {trace_theta(m.code(MTuple::M1)), trace_theta(m.code(MTuple::M2)),
          trace_theta(m.code(MTuple::M3)), trace_theta(m.code(MTuple::M4))};
}

ThetaVec parse_theta(std::string_view text) {
  ThetaVec v;
  for (int i = 0; i < 4; ++i) {
    auto comma = text.find(',');
    if ((i < 3) == (comma == std::string_view::npos))
      throw ParseError("theta needs four comma-separated rationals");
    v[i] = parse_rational(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return v;
}

std::string to_string(const ThetaVec& v) {
  std::ostringstream os;
  os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ")";
  return os.str();
}

const std::vector<RootF4>& f4_roots() {
  static const std::vector<RootF4> roots = [] {
    std::vector<RootF4> r;
    for (int i = 0; i < 4; ++i)
      for (int s : {1, -1}) {
        RootF4 a{0, 0, 0, 0};
        a[i] = s;
        r.push_back(a);
      }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            RootF4 a{0, 0, 0, 0};
            a[i] = si;
            a[j] = sj;
            r.push_back(a);
          }
    Rational h = make_rational(1, 2);
    for (int mask = 0; mask < 16; ++mask) {
      RootF4 a;
      for (int i = 0; i < 4; ++i) a[i] = (mask >> i) & 1 ? -h : h;
      r.push_back(a);
    }
    return r;
  }();
  return roots;
}

Rational dot(const RootF4& a, const ThetaVec& v) {
  return a[0] * v[0] + a[1] * v[1] + a[2] * v[2] + a[3] * v[3];
}

ThetaVec Reflection::apply(const ThetaVec& v) const {
  Rational norm2 = dot(root, root);
  Rational c = 2 * (dot(root, v) - level) / norm2;
  ThetaVec out;
  for (int i = 0; i < 4; ++i) out[i] = v[i] - c * root[i];
  return out;
}

ThetaVec apply_word(const ReflectionWord& w, ThetaVec v) {
  for (const Reflection& r : w) v = r.apply(v);
  return v;
}

// Every facet is written as (alpha, v) >= k, so the last one uses
// -(e1 + e2) at level -1.
const std::array<Reflection, kFacetCount>& alcove_facets() {
  static const std::array<Reflection, kFacetCount> facets = [] {
    Rational h = make_rational(1, 2);
    return std::array<Reflection, kFacetCount>{{
        {{0, 1, -1, 0}, 0, 0},
        {{0, 0, 1, -1}, 0, 1},
        {{0, 0, 0, 1}, 0, 2},
        {{h, -h, -h, -h}, 0, 3},
        {{-1, -1, 0, 0}, -1, 4},
    }};
  }();
  return facets;
}

bool in_closed_alcove(const ThetaVec& v) {
  for (const auto& f : alcove_facets())
    if (dot(f.root, v) < f.level) return false;
  return true;
}

bool in_open_alcove(const ThetaVec& v) {
  for (const auto& f : alcove_facets())
    if (dot(f.root, v) <= f.level) return false;
  return true;
}

Reduction reduce_to_alcove(const ThetaVec& v) {
  Reduction r{v, {}};
  while (true) {
    const Reflection* violated = nullptr;
    for (const auto& f : alcove_facets())
      if (dot(f.root, r.point) < f.level) {
        violated = &f;
        break;
      }
    if (!violated) return r;
    r.point = violated->apply(r.point);
    r.word.push_back(*violated);
  }
}

int wall_count(const ThetaVec& reduced) {
  if (!in_closed_alcove(reduced)) throw NotReduced(to_string(reduced));
  int n = 0;
  for (const auto& f : alcove_facets())
    if (dot(f.root, reduced) == f.level) ++n;
  return n;
}

std::array<int, 4> alcove_x60(const ThetaVec& v) {
  std::array<int, 4> out{};
  for (int i = 0; i < 4; ++i) {
    Rational x = 60 * v[i];
    if (x.get_den() != 1) throw NotReduced("denominator does not divide 60: " + to_string(v));
    out[i] = static_cast<int>(x.get_num().get_si());
  }
  return out;
}

ThetaVec okamoto_to_theta(const ThetaVec& v) { return {v[1], v[2], v[0] + 1, v[3] + 1}; }

namespace {

bool same_word(const ReflectionWord& a, const ReflectionWord& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].facet != b[i].facet) return false;
  return true;
}

}  // namespace

OkamotoReport okamoto_alcove_check() {
  // Vertices of the alcove shape; strictly positive weights give interior
  // points.
  const std::array<ThetaVec, 5> vertices = {{
      {0, 0, 0, 0},
      {1, 0, 0, 0},
      {make_rational(1, 2), make_rational(1, 2), 0, 0},
      {make_rational(2, 3), make_rational(1, 3), make_rational(1, 3), 0},
      {make_rational(3, 4), make_rational(1, 4), make_rational(1, 4), make_rational(1, 4)},
  }};
  const std::array<std::array<int, 5>, 4> weights = {{{1, 1, 1, 1, 1}, {3, 1, 4, 1, 5}, {1, 7, 2, 9, 3}, {10, 1, 1, 1, 1}}};

  OkamotoReport rep;
  bool first = true;
  for (const auto& w : weights) {
    ThetaVec v{0, 0, 0, 0};
    int total = 0;
    for (int j = 0; j < 5; ++j) {
      for (int i = 0; i < 4; ++i) v[i] += w[j] * vertices[j][i];
      total += w[j];
    }
    for (auto& x : v) x /= total;
    ThetaVec th = okamoto_to_theta(v);
    Reduction red = reduce_to_alcove(th);
    if (!in_open_alcove(red.point))
      throw InconsistentWord("interior point " + to_string(th) + " reduced onto a wall");
    if (first) rep.word = red.word;
    else if (!same_word(rep.word, red.word))
      throw InconsistentWord("interior points need different words");
    first = false;
    rep.samples.push_back(th);
    rep.images.push_back(red.point);
  }

  // A point on the v4 = 0 facet goes, under the same word, to a wall.
  ThetaVec edge = {make_rational(43, 60), make_rational(11, 60), make_rational(7, 60), 0};
  ThetaVec image = apply_word(rep.word, okamoto_to_theta(edge));
  rep.boundary_to_boundary = in_closed_alcove(image) && wall_count(image) >= 1;
  return rep;
}

}  // namespace ico
