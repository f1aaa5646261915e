// Mapping class group and sign group actions on monodromy data, the
// geometric orbits on S, and the branch permutations of each orbit.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "icosa/enumerate.hpp"
#include "icosa/group.hpp"
#include "icosa/permg.hpp"

namespace ico {

// The trace-level formulas for omega_1, omega_2, omega_3 (i = 1, 2, 3).
MTuple omega_tuple(int i, const MTuple& m);
// omega_i(M_i, M_{i+1}) = (M_{i+1}, M_{i+1} M_i M_{i+1}^-1), other slots fixed.
MatTuple4 omega_matrix(const GroupTable& G, int i, const MatTuple4& T);
MatTuple4 omega_matrix_inverse(const GroupTable& G, int i, const MatTuple4& T);

// Number of elements of S on which omega_tuple(i, .) disagrees with the
// seven-tuple of omega_matrix applied to the stored representative. S must
// carry representatives (a freshly enumerated set does).
std::size_t omega_oracle_mismatches(const GroupTable& G, const TripleSet& S, int i);

// Even sign vectors (e1, e2, e3, e4), each +-1 with product 1.
using SignVec = std::array<int, 4>;
const std::array<SignVec, 8>& all_signs();
// (-1,-1,1,1), (1,-1,-1,1), (1,1,-1,-1).
const std::array<SignVec, 3>& sign_generators();
MTuple sign_act(const SignVec& e, const MTuple& m);
MatTuple4 sign_act(const GroupTable& G, const SignVec& e, const MatTuple4& T);

// The actions above as permutations of the indices of S.
struct BraidTables {
  std::array<std::vector<std::uint32_t>, 3> omega;
  std::array<std::vector<std::uint32_t>, 3> omega_inv;
  std::array<std::vector<std::uint32_t>, 3> sign;
};
// Throws RepNotInS if an image leaves S.
BraidTables build_braid_tables(const TripleSet& S);

struct OrbitPartition {
  std::vector<std::uint32_t> orbit_of;           // S index -> orbit id
  std::vector<std::vector<std::uint32_t>> members;  // sorted; orbit ids by least member
  std::size_t count() const { return members.size(); }
};
// Closure under the three omegas, their inverses and the sign generators.
// Throws OrbitCountMismatch unless exactly `expected` orbits appear
// (pass 0 to skip the check).
OrbitPartition geometric_orbits(const TripleSet& S, const BraidTables& B, std::size_t expected = 52);

enum class InfinityConvention {
  Standard,   // rho_inf = (rho_1 rho_0)^-1
  Reversed,   // rho_inf = (rho_0 rho_1)^-1
};

struct BranchData {
  std::size_t k = 0;
  std::vector<std::uint32_t> members;  // S indices of the pure-braid orbit, in BFS order
  Perm rho0, rho1, rho_inf;
};
// Pure braid orbit <omega_1^2, omega_2^2> of S[index]; rho0 is induced by
// omega_1^2 and rho1 by omega_2^2.
BranchData branch_data(const BraidTables& B, std::size_t index,
                       InfinityConvention conv = InfinityConvention::Standard);

}  // namespace ico
