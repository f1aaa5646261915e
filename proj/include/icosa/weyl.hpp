// The affine F4 Weyl group acting on theta-space: reflections, reduction
// into the closed standard alcove, wall incidence, and the check that the
// Okamoto alcove is carried rigidly onto the standard one.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "icosa/exact.hpp"
#include "icosa/group.hpp"

namespace ico {

using ThetaVec = std::array<Rational, 4>;
using RootF4 = std::array<Rational, 4>;

ThetaVec theta_of(const MTuple& m);
ThetaVec parse_theta(std::string_view text);  // "a,b,c,d"
std::string to_string(const ThetaVec& v);      // "(a, b, c, d)" reduced fractions

// All 48 roots: +-e_i, +-e_i +- e_j, (+-e1 +- e2 +- e3 +- e4)/2.
const std::vector<RootF4>& f4_roots();
Rational dot(const RootF4& a, const ThetaVec& v);

// s_{alpha,k}(v) = v - ((alpha, v) - k) alpha_check.
struct Reflection {
  RootF4 root;
  Rational level;
  int facet = -1;  // index of the standard-alcove facet, or -1
  ThetaVec apply(const ThetaVec& v) const;
};
using ReflectionWord = std::vector<Reflection>;
ThetaVec apply_word(const ReflectionWord& w, ThetaVec v);  // left to right

// Facets of the standard alcove in their fixed order:
//   0: th2 >= th3   1: th3 >= th4   2: th4 >= 0
//   3: th1 >= th2 + th3 + th4       4: th1 + th2 <= 1
inline constexpr int kFacetCount = 5;
const std::array<Reflection, kFacetCount>& alcove_facets();
bool in_closed_alcove(const ThetaVec& v);
bool in_open_alcove(const ThetaVec& v);

struct Reduction {
  ThetaVec point;
  ReflectionWord word;
};
// Reflects in the first violated facet until none is violated.
Reduction reduce_to_alcove(const ThetaVec& v);

// Number of facet equalities at a reduced point; throws NotReduced.
int wall_count(const ThetaVec& reduced);

// 60 * v as integers (v must have denominators dividing 60).
std::array<int, 4> alcove_x60(const ThetaVec& v);

// Okamoto's alcove is the standard alcove in coordinates
// v1 = th3 - 1, v2 = th1, v3 = th2, v4 = th4 - 1.
ThetaVec okamoto_to_theta(const ThetaVec& v);
struct OkamotoReport {
  ReflectionWord word;
  std::vector<ThetaVec> samples;  // theta coordinates of the sampled points
  std::vector<ThetaVec> images;   // their reductions
  bool boundary_to_boundary = false;
};
// Throws InconsistentWord if interior points need different words or do not
// land in the open standard alcove.
OkamotoReport okamoto_alcove_check();

}  // namespace ico
