#include "icosa/group.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "icosa/errors.hpp"

namespace ico {

char to_char(A5Class c) {
  switch (c) {
    case A5Class::Trivial: return '1';
    case A5Class::A: return 'a';
    case A5Class::B: return 'b';
    case A5Class::C: return 'c';
    case A5Class::D: return 'd';
  }
  return '?';
}

A5Class a5_class_of_trace(Trace t) {
  switch (t) {
    case Trace::Two:
    case Trace::MinusTwo: return A5Class::Trivial;
    case Trace::Zero: return A5Class::A;
    case Trace::One:
    case Trace::MinusOne: return A5Class::B;
    case Trace::Phi:
    case Trace::MinusPhi: return A5Class::C;
    case Trace::PhiMinusOne:
    case Trace::OneMinusPhi: return A5Class::D;
  }
  return A5Class::Trivial;
}

Quat generator1() {
  Rational h = make_rational(1, 2);
  return {GoldenNum(-h), GoldenNum(h), GoldenNum(h), GoldenNum(h)};
}

Quat generator2() {
  Rational h = make_rational(1, 2);
  GoldenNum sigma(-h, h);  // (sqrt5 - 1)/2
  GoldenNum tau(h, h);     // (sqrt5 + 1)/2
  GoldenNum half(h);
  return {0, half, half * sigma, half * tau};
}

GroupTable build_group() {
  GroupTable G;
  const Quat g1 = generator1(), g2 = generator2();
  std::unordered_map<Quat, Elem> index;
  auto add = [&](const Quat& q) -> Elem {
    auto [it, inserted] = index.try_emplace(q, static_cast<Elem>(G.elements_.size()));
    if (inserted) {
      if (G.elements_.size() >= kGroupOrder)
        throw ClosureOverflow("more than 120 elements generated");
      G.elements_.push_back(q);
    }
    return it->second;
  };
  add(Quat::identity());
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    Quat x = G.elements_[head];
    add(x * g1);
    add(x * g2);
  }
  if (G.elements_.size() != kGroupOrder)
    throw ClosureOverflow("closure has " + std::to_string(G.elements_.size()) + " elements");

  G.mul_.resize(kGroupOrder * kGroupOrder);
  for (int a = 0; a < kGroupOrder; ++a)
    for (int b = 0; b < kGroupOrder; ++b) {
      auto it = index.find(G.elements_[a] * G.elements_[b]);
      if (it == index.end()) throw ClosureOverflow("product escaped the closure");
      G.mul_[a * kGroupOrder + b] = it->second;
    }
  for (int a = 0; a < kGroupOrder; ++a) {
    for (int b = 0; b < kGroupOrder; ++b)
      if (G.mul_[a * kGroupOrder + b] == 0) G.inv_[a] = static_cast<Elem>(b);
    G.trace_[a] = trace_from_value(G.elements_[a].trace());
    G.a5_[a] = a5_class_of_trace(G.trace_[a]);
  }
  G.minus_one_ = index.at(-Quat::identity());
  G.gen1_ = index.at(g1);
  G.gen2_ = index.at(g2);
  return G;
}

Elem GroupTable::index_of(const Quat& q) const {
  auto it = std::find(elements_.begin(), elements_.end(), q);
  if (it == elements_.end()) throw std::out_of_range("quaternion not in the group");
  return static_cast<Elem>(it - elements_.begin());
}

std::vector<Elem> GroupTable::center() const {
  std::vector<Elem> z;
  for (int a = 0; a < kGroupOrder; ++a) {
    bool central = true;
    for (int b = 0; b < kGroupOrder && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(static_cast<Elem>(a));
  }
  return z;
}

std::vector<std::vector<Elem>> GroupTable::conjugacy_classes() const {
  std::vector<std::vector<Elem>> classes;
  std::vector<bool> seen(kGroupOrder, false);
  for (int a = 0; a < kGroupOrder; ++a) {
    if (seen[a]) continue;
    std::vector<Elem> cls;
    for (int h = 0; h < kGroupOrder; ++h) {
      Elem c = mul(mul(static_cast<Elem>(h), static_cast<Elem>(a)), inv(static_cast<Elem>(h)));
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool GroupTable::is_group_law() const {
  for (int a = 0; a < kGroupOrder; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a || mul(a, inv(a)) != 0) return false;
    for (int b = 0; b < kGroupOrder; ++b)
      for (int c = 0; c < kGroupOrder; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

std::string GroupTable::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const Quat& q : elements_) {
    feed(q.w.to_string());
    feed(q.x.to_string());
    feed(q.y.to_string());
    feed(q.z.to_string());
    feed(";");
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

ElemSet subgroup_closure(const GroupTable& G, std::initializer_list<Elem> gens) {
  ElemSet set;
  std::array<Elem, kGroupOrder> queue{};
  int n = 0;
  set.insert(0);
  queue[n++] = 0;
  for (int head = 0; head < n; ++head)
    for (Elem g : gens) {
      Elem y = G.mul(queue[head], g);
      if (!set.contains(y)) {
        set.insert(y);
        queue[n++] = y;
      }
    }
  return set;
}

bool generates(const GroupTable& G, Elem a, Elem b, Elem c) {
  const Elem gens[3] = {a, b, c};
  ElemSet set;
  std::array<Elem, kGroupOrder> queue{};
  int n = 0;
  set.insert(0);
  queue[n++] = 0;
  for (int head = 0; head < n; ++head)
    for (Elem g : gens) {
      Elem y = G.mul(queue[head], g);
      if (!set.contains(y)) {
        set.insert(y);
        queue[n++] = y;
        if (n > 60) return true;
      }
    }
  return false;
}

MatTuple4 complete_tuple(const GroupTable& G, Elem m1, Elem m2, Elem m3) {
  return {{m1, m2, m3, G.inv(G.mul(G.mul(m3, m2), m1))}};
}

bool satisfies_product_relation(const GroupTable& G, const MatTuple4& T) {
  return G.mul(G.mul(G.mul(T[3], T[2]), T[1]), T[0]) == GroupTable::identity();
}

MTuple MTuple::from_values(const std::array<GoldenNum, 7>& v) {
  std::array<Trace, 7> t{};
  for (int i = 0; i < 7; ++i) t[i] = trace_from_value(v[i]);
  return MTuple(t);
}

std::array<GoldenNum, 7> MTuple::values() const {
  std::array<GoldenNum, 7> v;
  for (int i = 0; i < 7; ++i) v[i] = value(i);
  return v;
}

std::uint32_t MTuple::key() const {
  std::uint32_t k = 0;
  for (Trace t : t_) k = k * 9 + static_cast<std::uint32_t>(t);
  return k;
}

MTuple MTuple::from_key(std::uint32_t key) {
  std::array<Trace, 7> t{};
  for (int i = 6; i >= 0; --i) {
    t[i] = static_cast<Trace>(key % 9);
    key /= 9;
  }
  return MTuple(t);
}

std::string MTuple::to_string() const {
  std::string s = "(";
  for (int i = 0; i < 7; ++i) {
    if (i) s += ", ";
    s += ico::to_string(t_[i]);
  }
  return s + ")";
}

MTuple seven_tuple(const GroupTable& G, const MatTuple4& T) {
  return MTuple({G.trace(T[0]), G.trace(T[1]), G.trace(T[2]), G.trace(T[3]),
                 G.trace(G.mul(T[0], T[1])), G.trace(G.mul(T[1], T[2])),
                 G.trace(G.mul(T[0], T[2]))});
}

Integer hall_generating_tuples(unsigned n) {
  auto p = [n](unsigned long b) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, n);
    return r;
  };
  return p(120) - 5 * p(24) - 6 * p(20) - 10 * p(12) + 20 * p(6) + 60 * p(4) - 60 * p(2);
}

}  // namespace ico
