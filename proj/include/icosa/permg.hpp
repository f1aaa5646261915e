// Permutations on {0..k-1} (printed 1-based), cycle types, exact group
// orders by Schreier-Sims, Riemann-Hurwitz genus and pair conjugacy.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "icosa/exact.hpp"

namespace ico {

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);  // identity
  explicit Perm(std::vector<std::uint32_t> images);  // must be a bijection

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  // "(1 2)(3 4 5)", fixed points omitted; "()" for the identity.
  std::string to_cycles() const;
  // Parses cycle notation; degree 0 means "largest point mentioned".
  static Perm parse_cycles(std::string_view text, std::size_t degree = 0);

 private:
  std::vector<std::uint32_t> img_;
};

// (p * q)(x) = p(q(x)): q acts first.
Perm operator*(const Perm& p, const Perm& q);

// Cycle lengths sorted ascending, fixed points included.
using CycleType = std::vector<int>;
CycleType cycle_type(const Perm& p);

// Compact notation: parts ascending with exponents, 1-cycles dropped,
// e.g. "2^4 3^8 5^8". The identity on k > 1 points is "1"; on one point "".
std::string partition_string(const CycleType& c);
// Inverse of partition_string for a partition of k (fills in 1-cycles).
// Throws ParseError if the parts exceed k.
CycleType parse_partition(std::string_view text, int k);

// The table's display rule for the three branch cycle types: a single entry
// if all agree; otherwise the odd one out followed by the repeated one (the
// last listed entry is understood to be repeated). Three distinct types are
// listed in sorted order.
std::vector<std::string> display_partitions(const std::array<CycleType, 3>& types);
// Expands a display list back to the multiset of three cycle types (sorted).
std::array<CycleType, 3> expand_partitions(const std::vector<std::string>& shown, int k);

// Exact order of <gens> by the incremental Schreier-Sims algorithm.
Integer group_order(const std::vector<Perm>& gens);

struct GroupOrder {
  Integer order;
  std::vector<std::pair<unsigned long, int>> factors;  // ascending primes
  std::string label;  // "A12", "S3", or empty
  // The label if present, otherwise the factored order, e.g. "2^7 3 5".
  std::string to_string() const;
};
// Degrees 1 and 2 are labelled by the order itself ("1", "2").
GroupOrder describe_group(const std::vector<Perm>& gens, std::size_t degree);
std::vector<std::pair<unsigned long, int>> factor(Integer n);

// g = 1 - k + sum_p (k - #cycles(p)) / 2. Throws NonIntegralGenus if the
// sum is odd or the result negative.
int genus_rh(int k, const std::array<CycleType, 3>& types);

// True iff some s has s p1 s^-1 = p2 and s q1 s^-1 = q2.
bool pairs_conjugate(const Perm& p1, const Perm& q1, const Perm& p2, const Perm& q2);

}  // namespace ico
