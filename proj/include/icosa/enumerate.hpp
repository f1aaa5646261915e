// The set S of seven-tuples of generating triples of the binary icosahedral
// group. Two kernels fill it: a plain serial scan kept as the reference, and
// an OpenMP scan whose merge is deterministic.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "icosa/group.hpp"

namespace ico {

inline constexpr std::size_t kExpectedS = 26688;
inline constexpr std::uint64_t kExpectedGeneratingTriples = 1601280;

class TripleSet {
 public:
  TripleSet() = default;
  // tuples must be sorted by key and unique; reps, if non-empty, parallel.
  TripleSet(std::vector<MTuple> tuples, std::vector<MatTuple4> reps, std::uint64_t generating);

  std::size_t size() const { return tuples_.size(); }
  const MTuple& tuple(std::size_t i) const { return tuples_[i]; }
  const std::vector<MTuple>& tuples() const { return tuples_; }

  // Representatives are the lexicographically first (M1, M2, M3) in scan
  // order with the given seven-tuple. Absent when loaded from a cache.
  bool has_reps() const { return !reps_.empty(); }
  const MatTuple4& rep(std::size_t i) const { return reps_.at(i); }

  // Number of generating triples seen by the scan (0 if unknown).
  std::uint64_t generating_triples() const { return generating_; }

  std::optional<std::size_t> index_of(const MTuple& m) const;
  bool contains(const MTuple& m) const { return index_of(m).has_value(); }

 private:
  std::vector<MTuple> tuples_;
  std::vector<MatTuple4> reps_;
  std::vector<std::uint32_t> keys_;
  std::uint64_t generating_ = 0;
};

TripleSet enumerate_serial(const GroupTable& G);
// threads <= 0 uses the OpenMP default.
TripleSet enumerate_omp(const GroupTable& G, int threads = 0);

// OpenMP scan followed by the count checks; throws CountMismatch.
TripleSet enumerate_S(const GroupTable& G, int threads = 0);

}  // namespace ico
