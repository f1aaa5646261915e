#include "icosa/braid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "icosa/errors.hpp"

namespace ico {

MTuple omega_tuple(int i, const MTuple& m) {
  auto v = m.values();
  const GoldenNum &m1 = v[0], &m2 = v[1], &m3 = v[2], &m4 = v[3], &m12 = v[4], &m23 = v[5], &m13 = v[6];
  switch (i) {
    case 1:
      return MTuple::from_values({m2, m1, m3, m4, m12, m2 * m4 + m1 * m3 - m13 - m12 * m23, m23});
    case 2:
      return MTuple::from_values({m1, m3, m2, m4, m13, m23, m3 * m4 + m1 * m2 - m12 - m23 * m13});
    case 3:
      return MTuple::from_values({m1, m2, m4, m3, m12, m2 * m4 + m1 * m3 - m13 - m12 * m23, m23});
    default:
      throw std::invalid_argument("omega index must be 1, 2 or 3");
  }
}

MatTuple4 omega_matrix(const GroupTable& G, int i, const MatTuple4& T) {
  if (i < 1 || i > 3) throw std::invalid_argument("omega index must be 1, 2 or 3");
  MatTuple4 out = T;
  Elem a = T[i - 1], b = T[i];
  out.m[i - 1] = b;
  out.m[i] = G.mul(G.mul(b, a), G.inv(b));
  return out;
}

MatTuple4 omega_matrix_inverse(const GroupTable& G, int i, const MatTuple4& T) {
  if (i < 1 || i > 3) throw std::invalid_argument("omega index must be 1, 2 or 3");
  // (b, b a b^-1) -> (a, b): a = b^-1 (b a b^-1) b where b is the first slot.
  MatTuple4 out = T;
  Elem b = T[i - 1], c = T[i];
  out.m[i - 1] = G.mul(G.mul(G.inv(b), c), b);
  out.m[i] = b;
  return out;
}

const std::array<SignVec, 8>& all_signs() {
  static const std::array<SignVec, 8> signs = [] {
    std::array<SignVec, 8> out{};
    int n = 0;
    for (int mask = 0; mask < 16; ++mask)
      if (__builtin_popcount(mask) % 2 == 0) {
        for (int j = 0; j < 4; ++j) out[n][j] = (mask >> j) & 1 ? -1 : 1;
        ++n;
      }
    return out;
  }();
  return signs;
}

const std::array<SignVec, 3>& sign_generators() {
  static const std::array<SignVec, 3> gens = {{{-1, -1, 1, 1}, {1, -1, -1, 1}, {1, 1, -1, -1}}};
  return gens;
}

MTuple sign_act(const SignVec& e, const MTuple& m) {
  auto c = m.codes();
  auto flip = [](Trace t, int s) { return s < 0 ? negate(t) : t; };
  for (int j = 0; j < 4; ++j) c[j] = flip(c[j], e[j]);
  c[MTuple::M12] = flip(c[MTuple::M12], e[0] * e[1]);
  c[MTuple::M23] = flip(c[MTuple::M23], e[1] * e[2]);
  c[MTuple::M13] = flip(c[MTuple::M13], e[0] * e[2]);
  return MTuple(c);
}

MatTuple4 sign_act(const GroupTable& G, const SignVec& e, const MatTuple4& T) {
  MatTuple4 out = T;
  for (int j = 0; j < 4; ++j)
    if (e[j] < 0) out.m[j] = G.mul(G.minus_one(), T[j]);
  return out;
}

BraidTables build_braid_tables(const TripleSet& S) {
  BraidTables B;
  const std::size_t n = S.size();
  auto locate = [&](const MTuple& m) -> std::uint32_t {
    auto idx = S.index_of(m);
    if (!idx) throw RepNotInS(m.to_string());
    return static_cast<std::uint32_t>(*idx);
  };
  for (int i = 0; i < 3; ++i) {
    B.omega[i].resize(n);
    B.omega_inv[i].resize(n);
    B.sign[i].resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      B.omega[i][x] = locate(omega_tuple(i + 1, S.tuple(x)));
      B.sign[i][x] = locate(sign_act(sign_generators()[i], S.tuple(x)));
    }
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      std::uint32_t y = B.omega[i][x];
      if (hit[y]) throw RepNotInS("omega_" + std::to_string(i + 1) + " is not injective on S");
      hit[y] = true;
      B.omega_inv[i][y] = static_cast<std::uint32_t>(x);
    }
  }
  return B;
}

OrbitPartition geometric_orbits(const TripleSet& S, const BraidTables& B, std::size_t expected) {
  const std::size_t n = S.size();
  constexpr std::uint32_t kNone = ~0u;
  OrbitPartition P;
  P.orbit_of.assign(n, kNone);
  std::vector<const std::vector<std::uint32_t>*> moves;
  for (int i = 0; i < 3; ++i) {
    moves.push_back(&B.omega[i]);
    moves.push_back(&B.omega_inv[i]);
    moves.push_back(&B.sign[i]);
  }
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (P.orbit_of[seed] != kNone) continue;
    auto id = static_cast<std::uint32_t>(P.members.size());
    std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(seed)};
    P.orbit_of[seed] = id;
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (const auto* mv : moves) {
        std::uint32_t y = (*mv)[orbit[h]];
        if (P.orbit_of[y] == kNone) {
          P.orbit_of[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    P.members.push_back(std::move(orbit));
  }
  if (expected && P.count() != expected)
    throw OrbitCountMismatch(std::to_string(P.count()) + " orbits, expected " + std::to_string(expected));
  return P;
}

BranchData branch_data(const BraidTables& B, std::size_t index, InfinityConvention conv) {
  auto sq = [&](int i, std::uint32_t x) { return B.omega[i][B.omega[i][x]]; };
  BranchData d;
  std::unordered_map<std::uint32_t, std::uint32_t> pos;
  d.members.push_back(static_cast<std::uint32_t>(index));
  pos[static_cast<std::uint32_t>(index)] = 0;
  for (std::size_t h = 0; h < d.members.size(); ++h)
    for (int i : {0, 1}) {
      std::uint32_t y = sq(i, d.members[h]);
      if (pos.try_emplace(y, static_cast<std::uint32_t>(d.members.size())).second) d.members.push_back(y);
    }
  d.k = d.members.size();
  std::vector<std::uint32_t> r0(d.k), r1(d.k);
  for (std::size_t j = 0; j < d.k; ++j) {
    r0[j] = pos.at(sq(0, d.members[j]));
    r1[j] = pos.at(sq(1, d.members[j]));
  }
  d.rho0 = Perm(std::move(r0));
  d.rho1 = Perm(std::move(r1));
  d.rho_inf = conv == InfinityConvention::Standard ? (d.rho1 * d.rho0).inverse() : (d.rho0 * d.rho1).inverse();
  return d;
}

std::size_t omega_oracle_mismatches(const GroupTable& G, const TripleSet& S, int i) {
  if (!S.has_reps()) throw std::logic_error("omega oracle needs representatives");
  std::size_t bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(S.size()); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    if (seven_tuple(G, omega_matrix(G, i, S.rep(idx))) != omega_tuple(i, S.tuple(idx))) ++bad;
  }
  return bad;
}

}  // namespace ico
