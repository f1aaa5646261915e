#include <doctest.h>

#include "fixture.hpp"
#include "icosa/errors.hpp"
#include "icosa/valentiner.hpp"

using namespace ico;

TEST_SUITE("valentiner") {
  TEST_CASE("the matrices are reflections") {
    PrecisionGuard guard(60);
    const Real tol("1e-50");
    for (const auto& t : valentiner_triples()) {
      CAPTURE(t.name);
      for (const auto& r : t.r) CHECK(reflection_defect(r) < tol);
      CHECK(eigen_defect(t) < tol);
    }
  }

  TEST_CASE("pair traces of the standard triple") {
    PrecisionGuard guard(60);
    const auto t = valentiner_triples().front();
    const Real tol("1e-50");
    CHECK(trace(t.r[0] * t.r[1]).abs() < tol);
    CHECK(trace(t.r[1] * t.r[2]).abs() < tol);
    CHECK((trace(t.r[0] * t.r[2]) - Complex(1)).abs() < tol);
  }

  TEST_CASE("standard triple seven-tuple") {
    PrecisionGuard guard(60);
    const auto t = valentiner_triples().front();
    Sl2Invariants inv = sl2_invariants(t.r, t.order);
    CHECK(inv.m == MTuple({Trace::One, Trace::One, Trace::One, Trace::OneMinusPhi, Trace::One, Trace::One, Trace::Zero}));
    CHECK(inv.max_error < Real("1e-50"));
  }

  TEST_CASE("a wrong eigenvalue order is detected") {
    PrecisionGuard guard(60);
    auto t = valentiner_triples().front();
    std::swap(t.order.q[0], t.order.q[2]);
    // the eigenvalue test only sees the set; the order matters downstream
    CHECK(eigen_defect(t) < Real("1e-50"));
    CHECK_THROWS_AS(sl2_invariants(t.r, t.order), RecognitionFailed);
    t.order.q[0] = Rational(1, 7);
    CHECK(eigen_defect(t) > Real("1e-5"));
  }

  TEST_CASE("recognition fails off the trace set") {
    PrecisionGuard guard(60);
    auto t = valentiner_triples().front();
    t.order.q[0] = Rational(1, 7);
    CHECK_THROWS_AS(sl2_invariants(t.r, t.order), RecognitionFailed);
  }

  TEST_CASE("the three triples land on rows 38, 37, 46") {
    auto matches = run_valentiner(fixture::pipeline(), fixture::table(), 60);
    REQUIRE(matches.size() == 3);
    CHECK(matches[0].row == 38);
    CHECK(matches[0].alcove_x60 == std::array<int, 4>{48, 8, 8, 8});
    CHECK(matches[0].degree == 15);
    CHECK(matches[1].row == 37);
    CHECK(matches[1].alcove_x60 == std::array<int, 4>{36, 4, 4, 4});
    CHECK(matches[1].degree == 15);
    CHECK(matches[2].row == 46);
    CHECK(matches[2].alcove_x60 == std::array<int, 4>{45, 5, 5, 5});
    CHECK(matches[2].degree == 24);
    CHECK(matches[2].genus == 1);
    for (const auto& m : matches) CHECK(m.max_error < 1e-30);
  }

  TEST_CASE("higher precision gives the same answer") {
    auto a = run_valentiner(fixture::pipeline(), fixture::table(), 60);
    auto b = run_valentiner(fixture::pipeline(), fixture::table(), 200);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].m == b[i].m);
  }
}
