// The binary icosahedral group as an indexed multiplication table, together
// with the monodromy tuples and trace seven-tuples built on top of it.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "icosa/exact.hpp"

namespace ico {

using Elem = std::uint8_t;  // index into GroupTable::elements
inline constexpr int kGroupOrder = 120;

// Conjugacy class of the image in A5 = Gamma/{+-1}.
enum class A5Class : std::uint8_t { Trivial, A, B, C, D };
char to_char(A5Class c);  // '1', 'a', 'b', 'c', 'd'
A5Class a5_class_of_trace(Trace t);

class GroupTable {
 public:
  const std::vector<Quat>& elements() const { return elements_; }
  const Quat& element(Elem g) const { return elements_[g]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * kGroupOrder + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Trace trace(Elem a) const { return trace_[a]; }
  A5Class a5_class(Elem a) const { return a5_[a]; }
  static constexpr Elem identity() { return 0; }
  Elem minus_one() const { return minus_one_; }
  // The two quaternion generators, as element indices.
  Elem gen1() const { return gen1_; }
  Elem gen2() const { return gen2_; }

  // Index of q; throws std::out_of_range if q is not in the group.
  Elem index_of(const Quat& q) const;

  std::vector<Elem> center() const;
  // Conjugacy classes by brute-force conjugation, each sorted.
  std::vector<std::vector<Elem>> conjugacy_classes() const;
  bool is_group_law() const;
  // FNV-1a over the canonical serialization of all elements, in hex.
  std::string hash() const;

  friend GroupTable build_group();

 private:
  std::vector<Quat> elements_;
  std::vector<Elem> mul_;
  std::array<Elem, kGroupOrder> inv_{};
  std::array<Trace, kGroupOrder> trace_{};
  std::array<A5Class, kGroupOrder> a5_{};
  Elem minus_one_ = 0;
  Elem gen1_ = 0;
  Elem gen2_ = 0;
};

// (-1 + i + j + k)/2 and (i + sigma j + tau k)/2 with sigma = (sqrt5-1)/2,
// tau = (sqrt5+1)/2.
Quat generator1();
Quat generator2();

// Closure of the two generators; element 0 is the identity and the order is
// breadth-first over right multiplication by (gen1, gen2). Throws
// ClosureOverflow if more than 120 elements appear.
GroupTable build_group();

// Subgroup closure of the given elements, as a 120-bit membership mask.
struct ElemSet {
  std::uint64_t lo = 0, hi = 0;
  bool contains(Elem g) const { return g < 64 ? (lo >> g) & 1 : (hi >> (g - 64)) & 1; }
  void insert(Elem g) {
    if (g < 64) lo |= std::uint64_t{1} << g;
    else hi |= std::uint64_t{1} << (g - 64);
  }
  int size() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }
};
ElemSet subgroup_closure(const GroupTable& G, std::initializer_list<Elem> gens);

// True iff <a, b, c> is the whole group. Stops as soon as the closure passes
// 60 elements, since no proper subgroup is that large.
bool generates(const GroupTable& G, Elem a, Elem b, Elem c);

// (M1, M2, M3, M4) with M4 M3 M2 M1 = 1.
struct MatTuple4 {
  std::array<Elem, 4> m{};
  Elem operator[](int i) const { return m[i]; }
  friend bool operator==(const MatTuple4&, const MatTuple4&) = default;
};

// Completes (M1, M2, M3) by M4 = (M3 M2 M1)^-1.
MatTuple4 complete_tuple(const GroupTable& G, Elem m1, Elem m2, Elem m3);
bool satisfies_product_relation(const GroupTable& G, const MatTuple4& T);

// (m1, m2, m3, m4, m12, m23, m13) with m_i = Tr(M_i), m_ij = Tr(M_i M_j).
// Components are stored as dictionary codes, so the packed key is a
// canonical identity for the tuple.
class MTuple {
 public:
  enum Slot { M1, M2, M3, M4, M12, M23, M13 };

  MTuple() = default;
  explicit MTuple(std::array<Trace, 7> t) : t_(t) {}
  // Throws NotIcosahedralTrace if a value is outside the dictionary.
  static MTuple from_values(const std::array<GoldenNum, 7>& v);

  Trace code(int slot) const { return t_[slot]; }
  const GoldenNum& value(int slot) const { return trace_value(t_[slot]); }
  std::array<GoldenNum, 7> values() const;
  const std::array<Trace, 7>& codes() const { return t_; }

  // Base-9 packing; sorting by key is the canonical order of S.
  std::uint32_t key() const;
  static MTuple from_key(std::uint32_t key);

  friend bool operator==(const MTuple&, const MTuple&) = default;
  friend bool operator<(const MTuple& a, const MTuple& b) { return a.key() < b.key(); }

  // "(m1, ..., m13)" with readable golden values.
  std::string to_string() const;

 private:
  std::array<Trace, 7> t_{};
};

inline constexpr std::uint32_t kMTupleKeySpace = 9u * 9 * 9 * 9 * 9 * 9 * 9;

MTuple seven_tuple(const GroupTable& G, const MatTuple4& T);

// Hall's count of generating n-tuples of the binary icosahedral group:
// 120^n - 5*24^n - 6*20^n - 10*12^n + 20*6^n + 60*4^n - 60*2^n.
Integer hall_generating_tuples(unsigned n);

}  // namespace ico
