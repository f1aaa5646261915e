#include <doctest.h>

#include <set>

#include "fixture.hpp"
#include "icosa/enumerate.hpp"

using namespace ico;

TEST_SUITE("enumerate") {
  TEST_CASE("size of S and Hall's count") {
    const auto& S = fixture::pipeline().S;
    CHECK(S.size() == kExpectedS);
    CHECK(S.generating_triples() == kExpectedGeneratingTriples);
    CHECK(Integer(static_cast<unsigned long>(S.size() * 60)) == hall_generating_tuples(3));
  }

  TEST_CASE("canonical order, unique keys, lookups") {
    const auto& S = fixture::pipeline().S;
    for (std::size_t i = 1; i < S.size(); ++i) REQUIRE(S.tuple(i - 1).key() < S.tuple(i).key());
    for (std::size_t i = 0; i < S.size(); i += 97) CHECK(S.index_of(S.tuple(i)) == i);
    MTuple all_two({Trace::Two, Trace::Two, Trace::Two, Trace::Two, Trace::Two, Trace::Two, Trace::Two});
    CHECK_FALSE(S.contains(all_two));
  }

  TEST_CASE("representatives realise their tuples and generate") {
    const auto& P = fixture::pipeline();
    REQUIRE(P.S.has_reps());
    for (std::size_t i = 0; i < P.S.size(); ++i) {
      const MatTuple4& T = P.S.rep(i);
      REQUIRE(satisfies_product_relation(P.G, T));
      REQUIRE(seven_tuple(P.G, T) == P.S.tuple(i));
      REQUIRE(generates(P.G, T[0], T[1], T[2]));
    }
  }

  TEST_CASE("serial reference agrees with the OpenMP kernel") {
    const auto& P = fixture::pipeline();
    TripleSet serial = enumerate_serial(P.G);
    CHECK(serial.tuples() == P.S.tuples());
    CHECK(serial.generating_triples() == P.S.generating_triples());
    for (std::size_t i = 0; i < serial.size(); i += 101) CHECK(serial.rep(i) == P.S.rep(i));
  }

  TEST_CASE("thread count does not change the result") {
    const auto& P = fixture::pipeline();
    for (int t : {1, 3}) {
      TripleSet s = enumerate_omp(P.G, t);
      CHECK(s.tuples() == P.S.tuples());
      CHECK(s.rep(0) == P.S.rep(0));
      CHECK(s.rep(s.size() - 1) == P.S.rep(s.size() - 1));
    }
  }

  TEST_CASE("every component is an icosahedral trace") {
    std::set<Trace> seen;
    for (const auto& m : fixture::pipeline().S.tuples())
      for (int s = 0; s < 7; ++s) seen.insert(m.code(s));
    CHECK(seen.size() <= kTraceCount);
    CHECK(seen.count(Trace::Zero) == 1);
  }
}
