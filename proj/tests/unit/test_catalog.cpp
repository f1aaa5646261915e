#include <doctest.h>

#include <set>

#include "icosa/catalog.hpp"
#include "icosa/errors.hpp"

using namespace ico;

TEST_SUITE("catalog") {
  TEST_CASE("contents") {
    const auto& C = catalog();
    CHECK(C.size() == 27);
    std::set<std::string> ids;
    for (const auto& e : C) ids.insert(e.id);
    CHECK(ids.size() == C.size());
    for (const char* id : {"sqrt_t", "hittet", "dih", "hitoct", "sol33", "thmC", "dm41", "sol46"}) CHECK(ids.count(id) == 1);
    CHECK(&find_entry("thmB") == &find_entry("sol33"));
    CHECK_THROWS_AS(find_entry("sol99"), std::out_of_range);
  }

  TEST_CASE("every entry solves its equation") {
    for (const auto& e : catalog()) {
      CAPTURE(e.id);
      EntryReport r = verify_entry(e);
      CHECK(r.residual_zero);
      CHECK(r.residual.empty());
      if (r.implicit_ok) CHECK(*r.implicit_ok);
      for (const auto& [theta, ok] : r.family) CHECK(ok);
      if (r.printed_fails) CHECK(*r.printed_fails);
      CHECK(r.pass());
    }
  }

  TEST_CASE("families carry a second parameter point") {
    for (const char* id : {"sqrt_t", "hittet", "dih", "hitoct"}) {
      CAPTURE(id);
      CHECK_FALSE(find_entry(id).family.empty());
    }
  }

  TEST_CASE("corrections are documented by failing originals") {
    CHECK(find_entry("sol27").printed_theta.has_value());
    CHECK(find_entry("sol35").printed_y.has_value());
  }

  TEST_CASE("the degenerate companion shares the curve data") {
    const auto& C = find_entry("thmC");
    const auto& D = find_entry("dm41");
    REQUIRE(C.modulus);
    REQUIRE(D.modulus);
    CHECK(*C.modulus == *D.modulus);
    CHECK(C.t == D.t);
    CHECK_FALSE(C.y == D.y);
  }

  TEST_CASE("wrong parameters are caught") {
    CatalogEntry e = find_entry("sol38");
    e.theta[3] = Rational(2, 5);
    e.family.clear();
    EntryReport r = verify_entry(e);
    CHECK_FALSE(r.residual_zero);
    CHECK_FALSE(r.pass());
    CHECK_THROWS_AS(verify_entry_or_throw(e), VerificationFailed);
  }

  TEST_CASE("leading coefficients where theta1 = theta2") {
    for (const char* id : {"sol22", "sol23", "sol27", "sol29", "sol30"}) {
      CAPTURE(id);
      const auto& e = find_entry(id);
      REQUIRE(e.leading.has_value());
      CHECK(e.theta[0] == e.theta[1]);
      CHECK(entry_leading(e) == e.theta[0] / (e.theta[0] + e.theta[1]));
    }
    CHECK_THROWS_AS(entry_leading(find_entry("sol38")), std::logic_error);
  }

  TEST_CASE("parser rejects junk") {
    CHECK_THROWS(parse_catalog("{"));
    CHECK(parse_catalog(R"({"version": 1, "entries": []})").empty());
    CHECK_THROWS(parse_catalog("[]"));
  }
}
