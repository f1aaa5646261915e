#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <random>

#include "fixture.hpp"
#include "icosa/braid.hpp"
#include "icosa/errors.hpp"

using namespace ico;

namespace {

// (0, 0, 0, -1, 0, phi, phi-1), the row-52 representative
MTuple row52() {
  return MTuple({Trace::Zero, Trace::Zero, Trace::Zero, Trace::MinusOne, Trace::Zero, Trace::Phi, Trace::PhiMinusOne});
}

}  // namespace

TEST_SUITE("braid") {
  TEST_CASE("omega formulas on the row-52 tuple") {
    CHECK(omega_tuple(1, row52()) ==
          MTuple({Trace::Zero, Trace::Zero, Trace::Zero, Trace::MinusOne, Trace::Zero, Trace::OneMinusPhi, Trace::Phi}));
    CHECK(omega_tuple(2, row52()) == MTuple({Trace::Zero, Trace::Zero, Trace::Zero, Trace::MinusOne, Trace::PhiMinusOne,
                                             Trace::Phi, Trace::MinusOne}));
  }

  TEST_CASE("sign action") {
    CHECK(sign_act({1, 1, 1, 1}, row52()) == row52());
    CHECK(sign_act({-1, -1, 1, 1}, row52()) ==
          MTuple({Trace::Zero, Trace::Zero, Trace::Zero, Trace::MinusOne, Trace::Zero, Trace::MinusPhi, Trace::OneMinusPhi}));
    const auto& S = fixture::pipeline().S;
    for (const auto& e : all_signs()) {
      CHECK(e[0] * e[1] * e[2] * e[3] == 1);
      for (std::size_t i = 0; i < S.size(); i += 53) {
        CHECK(sign_act(e, sign_act(e, S.tuple(i))) == S.tuple(i));
        CHECK(S.contains(sign_act(e, S.tuple(i))));
      }
    }
  }

  TEST_CASE("trace formulas agree with the matrix action on all of S") {
    const auto& P = fixture::pipeline();
    for (int i = 1; i <= 3; ++i) CHECK(omega_oracle_mismatches(P.G, P.S, i) == 0);
  }

  TEST_CASE("matrix action keeps the product relation and inverts") {
    const auto& P = fixture::pipeline();
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, P.S.size() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      const MatTuple4& T = P.S.rep(pick(rng));
      for (int i = 1; i <= 3; ++i) {
        MatTuple4 U = omega_matrix(P.G, i, T);
        REQUIRE(satisfies_product_relation(P.G, U));
        REQUIRE(omega_matrix_inverse(P.G, i, U) == T);
        REQUIRE(seven_tuple(P.G, U) == omega_tuple(i, seven_tuple(P.G, T)));
      }
    }
  }

  TEST_CASE("tables: inverses and braid relations") {
    const auto& B = fixture::pipeline().B;
    const std::size_t n = fixture::pipeline().S.size();
    for (int i = 0; i < 3; ++i)
      for (std::size_t x = 0; x < n; ++x) REQUIRE(B.omega_inv[i][B.omega[i][x]] == x);
    auto w = [&](int i, std::uint32_t x) { return B.omega[i - 1][x]; };
    for (std::uint32_t x = 0; x < n; ++x) {
      REQUIRE(w(1, w(2, w(1, x))) == w(2, w(1, w(2, x))));
      REQUIRE(w(2, w(3, w(2, x))) == w(3, w(2, w(3, x))));
    }
  }

  TEST_CASE("52 orbits with the reference sizes") {
    const auto& P = fixture::pipeline();
    CHECK(P.orbits.count() == 52);
    std::multiset<std::size_t> got, want;
    std::size_t total = 0;
    for (const auto& o : P.orbits.members) {
      got.insert(o.size());
      total += o.size();
    }
    for (const auto& r : expected_table1()) want.insert(r.n);
    CHECK(got == want);
    CHECK(total == kExpectedS);
    CHECK(P.orbits.members[fixture::orbit_of_row(33)].size() == 2304);
  }

  TEST_CASE("orbit count check fires") {
    const auto& P = fixture::pipeline();
    CHECK_THROWS_AS(geometric_orbits(P.S, P.B, 51), OrbitCountMismatch);
  }

  TEST_CASE("branch data of rows 1, 33 and 52") {
    const auto& P = fixture::pipeline();
    auto rep = [&](int row) { return P.orbits.members[fixture::orbit_of_row(row)].front(); };

    BranchData b1 = branch_data(P.B, rep(1));
    CHECK(b1.k == 1);
    CHECK(b1.rho0.is_identity());
    CHECK(b1.rho1.is_identity());
    CHECK(b1.rho_inf.is_identity());

    CHECK(branch_data(P.B, rep(33)).k == 12);

    BranchData b52 = branch_data(P.B, rep(52));
    CHECK(b52.k == 72);
    CHECK(partition_string(cycle_type(b52.rho0)) == "2^4 3^8 5^8");
    CHECK((b52.rho_inf * b52.rho1 * b52.rho0).is_identity());
  }

  TEST_CASE("pure-braid suborbits tile each geometric orbit evenly") {
    const auto& P = fixture::pipeline();
    for (const auto& orbit : P.orbits.members) {
      std::size_t k = branch_data(P.B, orbit.front()).k;
      CHECK(orbit.size() % k == 0);
    }
  }

  TEST_CASE("conventions give conjugate data") {
    const auto& P = fixture::pipeline();
    std::size_t x = P.orbits.members[fixture::orbit_of_row(52)].front();
    BranchData s = branch_data(P.B, x, InfinityConvention::Standard);
    BranchData r = branch_data(P.B, x, InfinityConvention::Reversed);
    CHECK(cycle_type(s.rho_inf) == cycle_type(r.rho_inf));
  }
}
