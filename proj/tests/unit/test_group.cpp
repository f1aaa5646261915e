#include <doctest.h>

#include <random>
#include <set>

#include "icosa/group.hpp"

using namespace ico;

namespace {

const GroupTable& group() {
  static const GroupTable G = build_group();
  return G;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("census") {
    const auto& G = group();
    CHECK(G.elements().size() == 120);
    CHECK(G.is_group_law());
    auto Z = G.center();
    REQUIRE(Z.size() == 2);
    CHECK(G.element(Z[0]) == Quat::identity());
    CHECK(G.element(Z[1]) == -Quat::identity());
    CHECK(G.conjugacy_classes().size() == 9);
    CHECK(G.element(GroupTable::identity()) == Quat::identity());
  }

  TEST_CASE("class sizes of the binary icosahedral group") {
    std::multiset<std::size_t> sizes;
    for (const auto& c : group().conjugacy_classes()) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 30, 20, 20, 12, 12, 12, 12});
  }

  TEST_CASE("A5 classes from traces") {
    CHECK(a5_class_of_trace(Trace::Zero) == A5Class::A);
    CHECK(a5_class_of_trace(Trace::MinusOne) == A5Class::B);
    CHECK(a5_class_of_trace(Trace::One) == A5Class::B);
    CHECK(a5_class_of_trace(Trace::PhiMinusOne) == A5Class::D);
    CHECK(a5_class_of_trace(Trace::OneMinusPhi) == A5Class::D);
    CHECK(a5_class_of_trace(Trace::Phi) == A5Class::C);
    CHECK(a5_class_of_trace(Trace::MinusPhi) == A5Class::C);
    CHECK(a5_class_of_trace(Trace::Two) == A5Class::Trivial);
    CHECK(a5_class_of_trace(Trace::MinusTwo) == A5Class::Trivial);
  }

  TEST_CASE("generation") {
    const auto& G = group();
    const Elem g1 = G.gen1(), g2 = G.gen2(), one = GroupTable::identity();
    CHECK(generates(G, g1, g2, one));
    CHECK_FALSE(generates(G, g1, g1, g1));
    CHECK_FALSE(generates(G, g1, G.minus_one(), g1));
    CHECK(subgroup_closure(G, {g1}).size() == 3);  // g1 has order 3 and trace -1
    CHECK(subgroup_closure(G, {g1, G.minus_one()}).size() == 6);
    CHECK(G.trace(g1) == Trace::MinusOne);
    CHECK(subgroup_closure(G, {g1, g2}).size() == 120);
  }

  TEST_CASE("seven-tuple of the generator triple") {
    const auto& G = group();
    MatTuple4 T = complete_tuple(G, G.gen1(), G.gen2(), GroupTable::identity());
    CHECK(satisfies_product_relation(G, T));
    MTuple m = seven_tuple(G, T);
    CHECK(m == MTuple({Trace::MinusOne, Trace::Zero, Trace::Two, Trace::MinusPhi, Trace::MinusPhi, Trace::Zero,
                       Trace::MinusOne}));
    CHECK(m.code(MTuple::M1) == G.trace(G.gen1()));
    CHECK(m.code(MTuple::M2) == G.trace(G.gen2()));
    CHECK(m.code(MTuple::M3) == Trace::Two);
    CHECK(m.code(MTuple::M12) == G.trace(G.mul(G.gen1(), G.gen2())));
    // M3 = 1, so M4 = (M2 M1)^-1 and m23 = m2, m13 = m1
    CHECK(m.code(MTuple::M23) == m.code(MTuple::M2));
    CHECK(m.code(MTuple::M13) == m.code(MTuple::M1));
    CHECK(trace_value(m.code(MTuple::M4)) == G.element(G.mul(G.gen2(), G.gen1())).trace());
  }

  TEST_CASE("identity tuple") {
    const auto& G = group();
    const Elem e = GroupTable::identity();
    MTuple m = seven_tuple(G, complete_tuple(G, e, e, e));
    for (int s = 0; s < 7; ++s) CHECK(m.code(s) == Trace::Two);
  }

  TEST_CASE("seven-tuples are conjugation invariant") {
    const auto& G = group();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, 119);
    for (int trial = 0; trial < 500; ++trial) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng), h = pick(rng);
      auto conj = [&](Elem x) { return G.mul(G.mul(h, x), G.inv(h)); };
      MTuple m = seven_tuple(G, complete_tuple(G, a, b, c));
      MTuple n = seven_tuple(G, complete_tuple(G, conj(a), conj(b), conj(c)));
      CHECK(m == n);
    }
  }

  TEST_CASE("key packing round trip") {
    const auto& G = group();
    MTuple m = seven_tuple(G, complete_tuple(G, G.gen1(), G.gen2(), G.gen1()));
    CHECK(MTuple::from_key(m.key()) == m);
    CHECK(m.key() < kMTupleKeySpace);
    CHECK(MTuple::from_values(m.values()) == m);
  }

  TEST_CASE("Hall's count") {
    CHECK(hall_generating_tuples(3) == 1601280);
    CHECK(hall_generating_tuples(3) / 60 == 26688);
    CHECK(hall_generating_tuples(2) % 60 == 0);
  }

  TEST_CASE("group hash is stable") {
    CHECK(build_group().hash() == group().hash());
    CHECK_FALSE(group().hash().empty());
  }
}
