#include <doctest.h>

#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "fixture.hpp"
#include "icosa/errors.hpp"
#include "icosa/permg.hpp"

using namespace ico;

namespace {

std::vector<Perm> row52_printed() {
  std::ifstream in(ICOSA_DATA_DIR "/row52_perms.txt");
  std::vector<Perm> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out.push_back(Perm::parse_cycles(line, 72));
  return out;
}

Perm random_perm(std::size_t k, std::mt19937& rng) {
  std::vector<std::uint32_t> img(k);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

std::size_t naive_order(const std::vector<Perm>& gens) {
  std::set<Perm> seen{Perm(gens.front().degree())};
  std::vector<Perm> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm q = g * p;
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen.size();
}

}  // namespace

TEST_SUITE("permg") {
  TEST_CASE("cycle types") {
    CHECK(cycle_type(Perm(5)) == CycleType{1, 1, 1, 1, 1});
    CHECK(cycle_type(Perm::parse_cycles("(1 2 3)(4 5)")) == CycleType{2, 3});
    CHECK(partition_string(CycleType{1, 1, 1, 1, 1}) == "1");
    CHECK(Perm::parse_cycles("(1 2 3)(4 5)").to_cycles() == "(1 2 3)(4 5)");
    CHECK(Perm(3).to_cycles() == "()");
    CHECK(parse_partition("2^4 3^8 5^8", 72).size() == 20);
    CHECK_THROWS_AS(parse_partition("5^3", 12), ParseError);
  }

  TEST_CASE("composition convention") {
    Perm p = Perm::parse_cycles("(1 2)", 3), q = Perm::parse_cycles("(2 3)", 3);
    // q acts first
    CHECK((p * q)(0) == 1);
    CHECK((p * q)(1) == 2);
    CHECK((p * q)(2) == 0);
  }

  TEST_CASE("display rule") {
    CycleType a{2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 5, 5, 5, 5, 5, 5, 5, 5};
    CHECK(display_partitions({a, a, a}) == std::vector<std::string>{"2^4 3^8 5^8"});
    CycleType t{1, 2, 2}, u{1, 1, 3};
    auto shown = display_partitions({t, u, u});
    CHECK(shown == std::vector<std::string>{"2^2", "3"});
    CHECK(expand_partitions(shown, 5) == std::array<CycleType, 3>{u, u, t});
  }

  TEST_CASE("group orders") {
    CHECK(group_order({Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)}) == 6);
    auto printed = row52_printed();
    REQUIRE(printed.size() == 2);
    CHECK(partition_string(cycle_type(printed[0])) == "2^4 3^8 5^8");
    GroupOrder g = describe_group(printed, 72);
    CHECK(g.to_string() == "2^32 3^4 5 7");
    CHECK(g.order == order_of_group_entry("2^32 3^4 5 7"));
    CHECK(fixture::class_of_row(41).group_order == order_of_group_entry("2^14 3^4 5 7"));
    CHECK(describe_group({Perm::parse_cycles("(1 2 3 4 5)", 5), Perm::parse_cycles("(1 2 3)", 5)}, 5).label == "A5");
  }

  TEST_CASE("Schreier-Sims agrees with naive closure") {
    std::mt19937 rng(29);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 60; ++trial) {
      std::size_t k = 3 + rng() % 6;
      std::vector<Perm> gens{random_perm(k, rng)};
      if (rng() % 2) gens.push_back(random_perm(k, rng));
      Integer o = group_order(gens);
      if (o > 10000) continue;
      REQUIRE(o == naive_order(gens));
      ++checked;
    }
    CHECK(checked >= 30);
  }

  TEST_CASE("Riemann-Hurwitz") {
    CycleType a = parse_partition("2^4 3^8 5^8", 72);
    CHECK(genus_rh(72, {a, a, a}) == 7);
    CHECK(genus_rh(1, {CycleType{1}, CycleType{1}, CycleType{1}}) == 0);
    CycleType b{1, 3, 5};
    CHECK(genus_rh(9, {b, b, b}) == 1);
    CHECK_THROWS_AS(genus_rh(3, {CycleType{1, 2}, CycleType{1, 1, 1}, CycleType{1, 1, 1}}), NonIntegralGenus);
  }

  TEST_CASE("genus is conjugation invariant") {
    std::mt19937 rng(41);
    auto printed = row52_printed();
    Perm inf = (printed[1] * printed[0]).inverse();
    for (int trial = 0; trial < 20; ++trial) {
      Perm s = random_perm(72, rng), si = s.inverse();
      std::array<CycleType, 3> t{cycle_type(s * printed[0] * si), cycle_type(s * printed[1] * si),
                                 cycle_type(s * inf * si)};
      CHECK(genus_rh(72, t) == 7);
    }
  }

  TEST_CASE("pair conjugacy") {
    std::mt19937 rng(43);
    auto printed = row52_printed();
    const Perm &p = printed[0], &q = printed[1];
    CHECK(pairs_conjugate(p, q, p, q));
    for (int trial = 0; trial < 10; ++trial) {
      Perm s = random_perm(72, rng), si = s.inverse();
      CHECK(pairs_conjugate(p, q, s * p * si, s * q * si));
    }
    // all three branch types agree here, so swapping the pair is no test
    CHECK_FALSE(pairs_conjugate(p, q, p * p, q));  // p^2 has lost its 2-cycles
    // same cycle types but a different pair
    Perm s = random_perm(72, rng);
    CHECK_FALSE(pairs_conjugate(p, q, p, s * q * s.inverse()));
  }
}
