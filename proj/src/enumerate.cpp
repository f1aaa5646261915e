#include "icosa/enumerate.hpp"

#include <algorithm>

#include "icosa/errors.hpp"

namespace ico {

TripleSet::TripleSet(std::vector<MTuple> tuples, std::vector<MatTuple4> reps, std::uint64_t generating)
    : tuples_(std::move(tuples)), reps_(std::move(reps)), generating_(generating) {
  keys_.reserve(tuples_.size());
  for (const MTuple& m : tuples_) keys_.push_back(m.key());
  if (!std::is_sorted(keys_.begin(), keys_.end()) ||
      std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end())
    throw CountMismatch("triple set is not sorted and unique");
  if (!reps_.empty() && reps_.size() != tuples_.size())
    throw CountMismatch("representative list does not match tuple list");
}

std::optional<std::size_t> TripleSet::index_of(const MTuple& m) const {
  auto k = m.key();
  auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

TripleSet enumerate_S(const GroupTable& G, int threads) {
  TripleSet S = enumerate_omp(G, threads);
  if (S.generating_triples() != kExpectedGeneratingTriples)
    throw CountMismatch("generating triples: " + std::to_string(S.generating_triples()));
  if (S.size() != kExpectedS) throw CountMismatch("|S| = " + std::to_string(S.size()));
  return S;
}

}  // namespace ico
